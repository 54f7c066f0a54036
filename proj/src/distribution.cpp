// Joint statistic distributions, reference polynomials, image tables.

#include "permstat/distribution.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "permstat/errors.hpp"
#include "permstat/forward_map.hpp"

namespace permstat {

void Polynomial3::add(int a, int b, int c, std::int64_t coeff) {
    auto key = std::array<int, 3>{a, b, c};
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (coeff != 0) terms.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
}

std::int64_t Polynomial3::total() const {
    std::int64_t sum = 0;
    for (const auto& [key, coeff] : terms) sum += coeff;
    return sum;
}

Polynomial3 Polynomial3::collapse_middle() const {
    Polynomial3 out;
    for (const auto& [key, coeff] : terms) out.add(key[0], 0, key[2], coeff);
    return out;
}

std::string Polynomial3::to_json(int n, const std::string& vector_label) const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["vector"] = vector_label;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [key, coeff] : terms) {
        arr.push_back({key[0], key[1], key[2], coeff});
    }
    doc["terms"] = std::move(arr);
    return doc.dump();
}

Polynomial3 Polynomial3::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string("polynomial JSON does not parse: ") + e.what());
    }
    if (!doc.contains("terms") || !doc["terms"].is_array()) {
        throw validation_error("polynomial JSON lacks a terms array");
    }
    Polynomial3 out;
    for (const auto& term : doc["terms"]) {
        if (!term.is_array() || term.size() != 4) {
            throw validation_error("polynomial JSON term is not a 4-tuple");
        }
        out.add(term[0].get<int>(), term[1].get<int>(), term[2].get<int>(),
                term[3].get<std::int64_t>());
    }
    return out;
}

std::string Polynomial3::to_csv() const {
    std::ostringstream os;
    os << "a,b,c,coeff\n";
    for (const auto& [key, coeff] : terms) {
        os << key[0] << ',' << key[1] << ',' << key[2] << ',' << coeff << '\n';
    }
    return os.str();
}

std::string cache_dir() {
    const char* dir = std::getenv("PERMSTAT_CACHE_DIR");
    return dir ? std::string(dir) : std::string();
}

namespace {

int clamp_jobs(int n, int jobs) {
    if (jobs < 1) jobs = 1;
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && jobs > static_cast<int>(hw) * 4) jobs = static_cast<int>(hw) * 4;
    const std::uint64_t total = factorial(n);
    if (static_cast<std::uint64_t>(jobs) > total) jobs = static_cast<int>(total);
    return jobs;
}

// Splits the n! ranks into contiguous chunks and folds each on a worker.
template <typename Fold>
void parallel_ranks(int n, int jobs, Fold fold) {
    const std::uint64_t total = factorial(n);
    jobs = clamp_jobs(n, jobs);
    if (jobs == 1) {
        fold(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) /
                                 static_cast<std::uint64_t>(jobs);
        const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) /
                                 static_cast<std::uint64_t>(jobs);
        pool.emplace_back([=] { fold(w, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

std::filesystem::path cache_file(int n, Vector v) {
    return std::filesystem::path(cache_dir()) /
           ("dist-" + std::string(vector_name(v)) + "-n" + std::to_string(n) + ".json");
}

Polynomial3 compute_distribution(int n, Vector v, int jobs) {
    jobs = clamp_jobs(n, jobs);
    std::vector<Polynomial3> parts(static_cast<size_t>(jobs));
    parallel_ranks(n, jobs, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        Polynomial3& local = parts[static_cast<size_t>(w)];
        enumerate_range(n, lo, hi, [&](const Permutation& p) {
            const StatTriple s = stat_vector(p, v);
            local.add(s.x, s.y, s.z);
        });
    });
    Polynomial3 out;
    for (auto& part : parts) {
        for (const auto& [key, coeff] : part.terms) {
            out.add(key[0], key[1], key[2], coeff);
        }
    }
    return out;
}

} // namespace

Polynomial3 joint_distribution(int n, Vector v, int jobs) {
    if (n < 1 || n > kEnumerationCap) {
        throw validation_error("joint_distribution: n must lie in 1.." +
                               std::to_string(kEnumerationCap));
    }
    const std::string dir = cache_dir();
    if (!dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        const auto path = cache_file(n, v);
        if (std::ifstream in{path}; in) {
            std::stringstream buf;
            buf << in.rdbuf();
            try {
                return Polynomial3::from_json(buf.str());
            } catch (const validation_error&) {
                // A corrupt cache entry is recomputed and overwritten below.
            }
        }
        Polynomial3 out = compute_distribution(n, v, jobs);
        if (std::ofstream of{path}; of) of << out.to_json(n, vector_name(v));
        return out;
    }
    return compute_distribution(n, v, jobs);
}

IdentityReport verify_identity(int n, Vector lhs, Vector rhs, int jobs, bool collapse_middle) {
    Polynomial3 a = joint_distribution(n, lhs, jobs);
    Polynomial3 b = joint_distribution(n, rhs, jobs);
    if (collapse_middle) {
        a = a.collapse_middle();
        b = b.collapse_middle();
    }
    IdentityReport rep;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    while (ia != a.terms.end() || ib != b.terms.end()) {
        const bool a_first = ib == b.terms.end() ||
                             (ia != a.terms.end() && ia->first < ib->first);
        const bool b_first = ia == a.terms.end() ||
                             (ib != b.terms.end() && ib->first < ia->first);
        std::array<int, 3> key{};
        std::int64_t ca = 0;
        std::int64_t cb = 0;
        if (a_first) {
            key = ia->first;
            ca = ia->second;
            ++ia;
        } else if (b_first) {
            key = ib->first;
            cb = ib->second;
            ++ib;
        } else {
            key = ia->first;
            ca = ia->second;
            cb = ib->second;
            ++ia;
            ++ib;
        }
        if (ca != cb) {
            std::ostringstream os;
            os << "term (" << key[0] << ',' << key[1] << ',' << key[2] << "): "
               << vector_name(lhs) << " has " << ca << ", " << vector_name(rhs)
               << " has " << cb;
            rep.ok = false;
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

std::map<std::uint64_t, std::uint64_t> image_table(int n, int jobs) {
    if (n < 1 || n > kTableCap) {
        throw validation_error("image_table: n must lie in 1.." + std::to_string(kTableCap));
    }
    jobs = clamp_jobs(n, jobs);
    std::vector<std::map<std::uint64_t, std::uint64_t>> parts(static_cast<size_t>(jobs));
    parallel_ranks(n, jobs, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        auto& local = parts[static_cast<size_t>(w)];
        enumerate_range(n, lo, hi, [&](const Permutation& p) {
            local.emplace(phi(p).encode(), p.encode());
        });
    });
    std::map<std::uint64_t, std::uint64_t> table;
    for (auto& part : parts) {
        for (const auto& [image, source] : part) {
            auto [it, inserted] = table.emplace(image, source);
            if (!inserted) {
                throw invariant_error(
                    "image collision: " + Permutation::decode(it->second, n).str() + " and " +
                    Permutation::decode(source, n).str() + " both map to " +
                    Permutation::decode(image, n).str());
            }
        }
    }
    return table;
}

std::vector<std::int64_t> q_factorial(int n) {
    std::vector<std::int64_t> coeff{1};
    for (int i = 2; i <= n; ++i) {
        std::vector<std::int64_t> next(coeff.size() + static_cast<size_t>(i) - 1, 0);
        for (size_t p = 0; p < coeff.size(); ++p) {
            for (int s = 0; s < i; ++s) next[p + static_cast<size_t>(s)] += coeff[p];
        }
        coeff = std::move(next);
    }
    return coeff;
}

namespace {

std::vector<std::int64_t> tally(int n, int (*stat)(const Permutation&)) {
    std::vector<std::int64_t> out(1, 0);
    enumerate(n, [&](const Permutation& p) {
        const int v = stat(p);
        if (static_cast<size_t>(v) >= out.size()) out.resize(static_cast<size_t>(v) + 1, 0);
        ++out[static_cast<size_t>(v)];
    });
    return out;
}

} // namespace

std::vector<std::int64_t> maj_distribution(int n) { return tally(n, &maj); }
std::vector<std::int64_t> des_distribution(int n) { return tally(n, &des); }
std::vector<std::int64_t> exc_distribution(int n) { return tally(n, &exc); }

} // namespace permstat
