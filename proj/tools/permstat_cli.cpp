// Command line front end: stats, map, invert, verify, distribution, render.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "permstat/distribution.hpp"
#include "permstat/errors.hpp"
#include "permstat/forward_map.hpp"
#include "permstat/inverse_map.hpp"
#include "permstat/permutation.hpp"
#include "permstat/render.hpp"
#include "permstat/statistics.hpp"

namespace {

using nlohmann::ordered_json;
using namespace permstat;

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream of(out_path);
    if (!of) throw validation_error("cannot open '" + out_path + "' for writing");
    of << text;
}

void emit_json(const ordered_json& doc, bool pretty, const std::string& out_path) {
    emit_text((pretty ? doc.dump(2) : doc.dump()) + "\n", out_path);
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= csv.size()) {
        const size_t next = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (!tok.empty()) out.push_back(tok);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// Exhaustive forward sweep: collisions surface through image_table, then
// every image must invert back to its unique source.
CheckResult check_bijection(int n, int jobs) {
    CheckResult res;
    auto table = image_table(n, jobs);
    if (table.size() != factorial(n)) {
        res.ok = false;
        res.detail = "image table has " + std::to_string(table.size()) + " entries";
        return res;
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(table.begin(), table.end());
    std::atomic<bool> ok{true};
    std::mutex mu;
    std::string detail;
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(entries.size())));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const size_t lo = entries.size() * static_cast<size_t>(w) / workers;
            const size_t hi = entries.size() * static_cast<size_t>(w + 1) / workers;
            for (size_t x = lo; x < hi && ok.load(); ++x) {
                const Permutation image = Permutation::decode(entries[x].first, n);
                const Permutation source = Permutation::decode(entries[x].second, n);
                try {
                    if (phi_inverse(image) != source) {
                        std::lock_guard<std::mutex> lk(mu);
                        ok = false;
                        detail = "inverse of " + image.str() + " disagrees with " + source.str();
                    }
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lk(mu);
                    ok = false;
                    detail = "inverse of " + image.str() + " failed: " + e.what();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    res.ok = ok.load();
    res.detail = detail;
    return res;
}

// The image must carry the paired statistics of its source.
CheckResult check_triple(int n, int jobs) {
    std::atomic<bool> ok{true};
    std::mutex mu;
    std::string detail;
    const std::uint64_t total = factorial(n);
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = total * static_cast<std::uint64_t>(w) /
                                     static_cast<std::uint64_t>(workers);
            const std::uint64_t hi = total * static_cast<std::uint64_t>(w + 1) /
                                     static_cast<std::uint64_t>(workers);
            enumerate_range(n, lo, hi, [&](const Permutation& p) {
                if (!ok.load()) return;
                const StatTriple a = stat_vector(p, Vector::LHS);
                const StatTriple b = stat_vector(phi(p), Vector::RHS);
                if (a.x != b.x || a.y != b.y || a.z != b.z) {
                    std::lock_guard<std::mutex> lk(mu);
                    ok = false;
                    detail = "statistics not carried for " + p.str();
                }
            });
        });
    }
    for (auto& th : pool) th.join();
    CheckResult res;
    res.ok = ok.load();
    res.detail = detail;
    return res;
}

CheckResult check_identity(int n, Vector lhs, Vector rhs, int jobs, bool collapse) {
    const IdentityReport rep = verify_identity(n, lhs, rhs, jobs, collapse);
    return {rep.ok, rep.detail};
}

CheckResult check_mahonian(int n) {
    CheckResult res;
    if (maj_distribution(n) != q_factorial(n)) {
        res.ok = false;
        res.detail = "maj does not match the q-factorial";
        return res;
    }
    if (des_distribution(n) != exc_distribution(n)) {
        res.ok = false;
        res.detail = "des and exc are not equidistributed";
    }
    return res;
}

int run(int argc, char** argv) {
    CLI::App app{"permutation statistics and bijection toolkit"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string word_text;
    std::string stats_list;
    auto* cmd_stats = app.add_subcommand("stats", "evaluate statistics of a word");
    cmd_stats->add_option("word", word_text, "permutation word")->required();
    cmd_stats->add_option("--stats", stats_list, "comma-separated statistic names");

    std::string map_word;
    bool map_trace = false;
    auto* cmd_map = app.add_subcommand("map", "apply the forward map");
    cmd_map->add_option("word", map_word, "permutation word")->required();
    cmd_map->add_flag("--trace", map_trace, "emit the intermediate data as JSON");

    std::string inv_word;
    bool inv_trace = false;
    auto* cmd_invert = app.add_subcommand("invert", "apply the inverse map");
    cmd_invert->add_option("word", inv_word, "permutation word")->required();
    cmd_invert->add_flag("--trace", inv_trace, "emit the deduction steps as JSON");

    int verify_n = 7;
    int verify_jobs = 1;
    std::string checks_list;
    auto* cmd_verify = app.add_subcommand("verify", "exhaustive checks over S_n");
    cmd_verify->add_option("--n", verify_n, "word length (default 7)");
    cmd_verify->add_option("--jobs", verify_jobs, "worker threads");
    cmd_verify->add_option("--check,--checks", checks_list,
                           "subset of bijection,triple,eq1,eq2,eq3,mahonian");

    int dist_n = 7;
    int dist_jobs = 1;
    std::string dist_vector = "lhs";
    std::string dist_format = "json";
    std::string dist_out;
    auto* cmd_dist = app.add_subcommand("distribution", "joint statistic distribution");
    cmd_dist->add_option("--n", dist_n, "word length (default 7)");
    cmd_dist->add_option("--vector", dist_vector, "lhs, rhs, or hl");
    cmd_dist->add_option("--format", dist_format, "json or csv");
    cmd_dist->add_option("--jobs", dist_jobs, "worker threads");
    cmd_dist->add_option("--out", dist_out, "output file (default stdout)");

    std::string render_word;
    std::string render_kind = "linear";
    std::string render_format = "ascii";
    std::string render_out;
    auto* cmd_render = app.add_subcommand("render", "draw a word diagram");
    cmd_render->add_option("word", render_word, "permutation word")->required();
    cmd_render->add_option("--kind", render_kind, "linear or planar");
    cmd_render->add_option("--format", render_format, "svg or ascii");
    cmd_render->add_option("--out", render_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*cmd_stats) {
        const Permutation p = Permutation::parse(word_text);
        std::vector<std::string> names =
            stats_list.empty() ? statistic_names() : split_list(stats_list);
        ordered_json doc;
        doc["input"] = p.display();
        doc["n"] = p.size();
        ordered_json vals = ordered_json::object();
        for (const auto& name : names) vals[name] = statistic_by_name(p, name);
        doc["stats"] = std::move(vals);
        emit_json(doc, pretty, "");
        return 0;
    }

    if (*cmd_map) {
        const Permutation p = Permutation::parse(map_word);
        if (map_trace) {
            ordered_json trace;
            phi_traced(p, trace);
            emit_json(trace, pretty, "");
        } else {
            emit_text(phi(p).display() + "\n", "");
        }
        return 0;
    }

    if (*cmd_invert) {
        const Permutation p = Permutation::parse(inv_word);
        if (inv_trace) {
            ordered_json trace;
            phi_inverse_traced(p, trace);
            emit_json(trace, pretty, "");
        } else {
            emit_text(phi_inverse(p).display() + "\n", "");
        }
        return 0;
    }

    if (*cmd_verify) {
        if (verify_n < 1 || verify_n > kTableCap) {
            throw validation_error("verify: --n must lie in 1.." + std::to_string(kTableCap));
        }
        std::vector<std::string> checks =
            checks_list.empty()
                ? std::vector<std::string>{"bijection", "triple", "eq1", "eq2", "eq3", "mahonian"}
                : split_list(checks_list);
        ordered_json doc;
        doc["n"] = verify_n;
        ordered_json results = ordered_json::object();
        bool all_ok = true;
        for (const auto& name : checks) {
            CheckResult res;
            if (name == "bijection") {
                res = check_bijection(verify_n, verify_jobs);
            } else if (name == "triple") {
                res = check_triple(verify_n, verify_jobs);
            } else if (name == "eq1") {
                res = check_identity(verify_n, Vector::LHS, Vector::RHS, verify_jobs, true);
            } else if (name == "eq2") {
                res = check_identity(verify_n, Vector::HL, Vector::RHS, verify_jobs, false);
            } else if (name == "eq3") {
                res = check_identity(verify_n, Vector::LHS, Vector::RHS, verify_jobs, false);
            } else if (name == "mahonian") {
                res = check_mahonian(verify_n);
            } else {
                throw validation_error("unknown check '" + name + "'");
            }
            all_ok = all_ok && res.ok;
            if (res.ok) {
                results[name] = "pass";
            } else {
                results[name] = ordered_json{{"status", "fail"}, {"detail", res.detail}};
            }
        }
        doc["checks"] = std::move(results);
        doc["ok"] = all_ok;
        emit_json(doc, pretty, "");
        return all_ok ? 0 : 1;
    }

    if (*cmd_dist) {
        const Vector v = vector_by_name(dist_vector);
        const Polynomial3 poly = joint_distribution(dist_n, v, dist_jobs);
        if (dist_format == "json") {
            emit_text(poly.to_json(dist_n, vector_name(v)) + "\n", dist_out);
        } else if (dist_format == "csv") {
            emit_text(poly.to_csv(), dist_out);
        } else {
            throw validation_error("unknown distribution format '" + dist_format + "'");
        }
        return 0;
    }

    if (*cmd_render) {
        const Permutation p = Permutation::parse(render_word);
        Diagram d;
        if (render_kind == "linear") {
            d = build_linear_diagram(p);
        } else if (render_kind == "planar") {
            d = build_planar_diagram(p);
        } else {
            throw validation_error("unknown diagram kind '" + render_kind + "'");
        }
        if (render_format == "svg") {
            emit_text(render_svg(d), render_out);
        } else if (render_format == "ascii") {
            emit_text(render_ascii(d), render_out);
        } else {
            throw validation_error("unknown render format '" + render_format + "'");
        }
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
