#include "modunits/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace modunits {

namespace {

constexpr char checkpoint_magic[] = "GOLDBACH-CKPT";

std::string iso8601_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t parse_ckpt_u64(const std::string& s, const char* what) {
    if (s.empty()) throw std::runtime_error(std::string("checkpoint parse: empty ") + what);
    if (s.size() > 1 && s[0] == '0')
        throw std::runtime_error(std::string("checkpoint parse: leading zero in ") + what);
    std::uint64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::runtime_error(std::string("checkpoint parse: non-decimal ") + what);
        std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
        if (v > (UINT64_MAX - digit) / 10)
            throw std::runtime_error(std::string("checkpoint parse: overflow in ") + what);
        v = v * 10 + digit;
    }
    return v;
}

std::string expect_prefix(const std::string& line, const std::string& prefix) {
    if (line.rfind(prefix, 0) != 0)
        throw std::runtime_error("checkpoint parse: expected line starting with '" +
                                 prefix + "'");
    return line.substr(prefix.size());
}

void validate_timestamp(const std::string& ts) {
    // YYYY-MM-DDTHH:MM:SSZ
    const char* pattern = "dddd-dd-ddTdd:dd:ddZ";
    if (ts.size() != 20) throw std::runtime_error("checkpoint parse: bad timestamp length");
    for (std::size_t i = 0; i < 20; i++) {
        bool ok = pattern[i] == 'd' ? (ts[i] >= '0' && ts[i] <= '9') : ts[i] == pattern[i];
        if (!ok) throw std::runtime_error("checkpoint parse: bad timestamp format");
    }
}

}  // namespace

verification_checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::runtime_error("cannot read checkpoint " + path);
    if (text.empty() || text.back() != '\n')
        throw std::runtime_error("checkpoint parse: missing trailing newline");

    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.size() != 4)
        throw std::runtime_error("checkpoint parse: expected 4 lines, got " +
                                 std::to_string(lines.size()));

    std::string magic_line = std::string(checkpoint_magic) + " ";
    std::string version = expect_prefix(lines[0], magic_line);
    if (version != "1")
        throw std::runtime_error("checkpoint schema version '" + version +
                                 "' is not supported; refusing to resume");

    verification_checkpoint c;
    c.schema_version = 1;
    c.verified_upto = parse_ckpt_u64(expect_prefix(lines[1], "verified_upto="), "verified_upto");
    if (c.verified_upto < 4 || c.verified_upto % 2 != 0)
        throw std::runtime_error("checkpoint parse: verified_upto must be even and >= 4");

    std::string pairs = expect_prefix(lines[2], "min_pairs=");
    std::size_t at = pairs.find('@');
    if (at == std::string::npos)
        throw std::runtime_error("checkpoint parse: min_pairs line needs count@target");
    c.min_pairs = parse_ckpt_u64(pairs.substr(0, at), "min_pairs count");
    c.min_pairs_at = parse_ckpt_u64(pairs.substr(at + 1), "min_pairs target");
    if (c.min_pairs == 0 || c.min_pairs_at < 4 || c.min_pairs_at % 2 != 0 ||
        c.min_pairs_at > c.verified_upto)
        throw std::runtime_error("checkpoint parse: inconsistent min_pairs record");

    c.updated = expect_prefix(lines[3], "updated=");
    validate_timestamp(c.updated);
    c.started_at = iso8601_now();
    return c;
}

void save_checkpoint(verification_checkpoint& c, const std::string& path) {
    c.updated = iso8601_now();
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << checkpoint_magic << " " << c.schema_version << "\n"
            << "verified_upto=" << c.verified_upto << "\n"
            << "min_pairs=" << c.min_pairs << "@" << c.min_pairs_at << "\n"
            << "updated=" << c.updated << "\n";
        out.flush();
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot replace checkpoint " + path);
}

sweep_result verify_range(std::uint64_t from, std::uint64_t to,
                          const std::string& checkpoint_path,
                          unsigned workers, std::uint64_t stride) {
    if (from < 4 || from % 2 != 0)
        throw std::domain_error("sweep start must be an even number >= 4");
    if (to < from || to % 2 != 0)
        throw std::domain_error("sweep end must be an even number >= the start");
    if (to > 100000000ull)
        throw std::domain_error("sweep end above 10^8 is out of scope");
    if (workers == 0) throw std::domain_error("worker count must be at least 1");
    if (stride == 0) throw std::domain_error("stride must be at least 1");

    std::uint64_t start = from;
    std::uint64_t min_pairs = 0;  // 0 means none recorded yet; real counts are >= 1
    std::uint64_t min_at = 0;
    std::string started = iso8601_now();
    bool persist = !checkpoint_path.empty();

    if (persist) {
        if (std::filesystem::exists(checkpoint_path)) {
            verification_checkpoint c = load_checkpoint(checkpoint_path);
            if (from > c.verified_upto + 2)
                throw std::domain_error(
                    "resume would leave a gap: checkpoint covers [4, " +
                    std::to_string(c.verified_upto) + "] but the sweep starts at " +
                    std::to_string(from));
            if (to <= c.verified_upto)
                return {c.verified_upto, c.min_pairs, c.min_pairs_at, 0};
            start = c.verified_upto + 2;
            min_pairs = c.min_pairs;
            min_at = c.min_pairs_at;
        } else if (from != 4) {
            throw std::domain_error(
                "a fresh checkpoint must start at 4 so its coverage is contiguous");
        }
    }

    // Primality table over [0, to] and the list of primes up to to/2.
    std::vector<std::uint8_t> tab(to + 1, 1);
    tab[0] = tab[1] = 0;
    for (std::uint64_t i = 2; i * i <= to; i++)
        if (tab[i])
            for (std::uint64_t j = i * i; j <= to; j += i) tab[j] = 0;
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= to / 2; i++)
        if (tab[i]) primes.push_back(static_cast<std::uint32_t>(i));

    // Workers claim chunks of `stride` consecutive even targets; the commit
    // loop merges strictly in chunk order, so the outcome does not depend on
    // worker count or on which chunks finished first.
    std::uint64_t evens = (to - start) / 2 + 1;
    std::uint64_t chunk_count = (evens + stride - 1) / stride;

    struct chunk_state {
        bool done = false;
        std::uint64_t min_pairs = 0;
        std::uint64_t min_at = 0;
        std::uint64_t counterexample = 0;
    };
    std::vector<chunk_state> chunks(chunk_count);
    std::mutex mtx;
    std::condition_variable cv;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        while (!stop.load()) {
            std::uint64_t k = next_chunk.fetch_add(1);
            if (k >= chunk_count) return;
            std::uint64_t first = start + 2 * k * stride;
            std::uint64_t last = std::min(first + 2 * (stride - 1), to);
            chunk_state s;
            for (std::uint64_t two_m = first; two_m <= last; two_m += 2) {
                std::uint64_t m = two_m / 2;
                std::uint64_t cnt = 0;
                for (std::uint32_t p : primes) {
                    if (p > m) break;
                    cnt += tab[two_m - p];
                }
                if (cnt == 0) {
                    s.counterexample = two_m;
                    break;
                }
                if (s.min_pairs == 0 || cnt < s.min_pairs) {
                    s.min_pairs = cnt;
                    s.min_at = two_m;
                }
            }
            {
                std::lock_guard<std::mutex> lk(mtx);
                chunks[k] = s;
                chunks[k].done = true;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; i++) pool.emplace_back(worker);

    sweep_result result;
    std::uint64_t frontier = start - 2;
    try {
        for (std::uint64_t k = 0; k < chunk_count && result.counterexample == 0; k++) {
            chunk_state s;
            {
                std::unique_lock<std::mutex> lk(mtx);
                cv.wait(lk, [&] { return chunks[k].done; });
                s = chunks[k];
            }
            if (s.min_pairs != 0 && (min_pairs == 0 || s.min_pairs < min_pairs)) {
                min_pairs = s.min_pairs;
                min_at = s.min_at;
            }
            if (s.counterexample != 0) {
                stop.store(true);
                result.counterexample = s.counterexample;
                frontier = s.counterexample - 2;
            } else {
                frontier = std::min(start + 2 * (k + 1) * stride - 2, to);
            }
            if (persist && frontier >= 4) {
                verification_checkpoint c;
                c.verified_upto = frontier;
                c.min_pairs = min_pairs;
                c.min_pairs_at = min_at;
                c.started_at = started;
                save_checkpoint(c, checkpoint_path);
            }
        }
    } catch (...) {
        stop.store(true);
        for (auto& th : pool) th.join();
        throw;
    }
    stop.store(true);
    for (auto& th : pool) th.join();

    result.verified_upto = frontier;
    result.min_pairs = min_pairs;
    result.min_pairs_at = min_at;
    return result;
}

}  // namespace modunits
