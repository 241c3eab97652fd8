#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "stree/canonical.hpp"
#include "stree/dot_export.hpp"
#include "stree/json_io.hpp"

using namespace stree;

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv(const std::string& s, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

int threads_cap() {
    const char* env = std::getenv("STRONGTREE_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v > 0 ? v : 1;
}

json make_manifest(const std::string& command, json parameters, std::uint64_t seed,
                   json bounds, std::size_t candidates, const json& result) {
    return json{{"command", command},
                {"parameters", std::move(parameters)},
                {"seed", seed},
                {"library_version", kVersion},
                {"threads", threads_cap()},
                {"bounds", std::move(bounds)},
                {"candidates_examined", candidates},
                {"result_digest", digest(result)}};
}

void emit(const std::string& command, json parameters, std::uint64_t seed, json bounds,
          std::size_t candidates, json result) {
    json out{{"manifest",
              make_manifest(command, std::move(parameters), seed, std::move(bounds), candidates,
                            result)},
             {"result", std::move(result)}};
    std::cout << stable_dump(out) << "\n";
}

std::vector<int> parse_levels(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

std::vector<Node> parse_nodes(const std::string& text) {
    std::vector<Node> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parse_node(cur));
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    return out;
}

Coloring make_tree_coloring(const std::string& gen, const Universe& u,
                            const std::vector<StrongSubtree>& members, std::uint64_t seed) {
    if (gen == "level-parity") {
        Coloring c;
        for (const auto& x : members)
            c.set(x, x.levels().front() % 2 == 0 ? "even" : "odd");
        return c;
    }
    return builtin_coloring(gen, u, members, seed);
}

SetColoring make_set_coloring(const std::string& gen, std::uint64_t seed) {
    if (gen == "constant") return [](const std::vector<int>&) { return std::string("c0"); };
    if (gen == "injective")
        return [](const std::vector<int>& A) {
            std::string s = "k";
            for (int a : A) s += ":" + std::to_string(a);
            return s;
        };
    if (gen == "min") return [](const std::vector<int>& A) { return std::to_string(A.front()); };
    if (gen == "sum-parity")
        return [](const std::vector<int>& A) {
            int s = 0;
            for (int a : A) s += a;
            return std::to_string(s % 2);
        };
    if (gen == "seeded-random")
        return [seed](const std::vector<int>& A) {
            std::string s;
            for (int a : A) s += std::to_string(a) + ",";
            return "s" + std::to_string(fnv(s, seed) % 3);
        };
    throw TreeError(ErrorCode::ConstraintViolation, "unknown set coloring generator: " + gen);
}

int run(int argc, char** argv) {
    CLI::App app{"finite strong-subtree combinatorics engine"};
    app.require_subcommand(1);

    int b = 2, m = 3, n = 1, d = 1, k = 2, p = 2, height = -1, min_witness = -1;
    int trials = 125, depth = 4;
    std::uint64_t seed = 0;
    std::string gen = "constant", mode = "milliken", kind = "pigeonhole", pred = "all";
    std::string levels_text, prefix_text = "e", mutate_what, format = "json";
    std::vector<std::string> node_lists;
    std::size_t bound_candidates = 0;

    auto* enumerate = app.add_subcommand("enumerate", "enumerate strong subtrees");
    enumerate->add_option("--b", b);
    enumerate->add_option("--m", m);
    enumerate->add_option("--n", n);
    enumerate->add_option("--levels", levels_text);
    enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    auto* classify = app.add_subcommand("classify", "canonical-form classification");
    classify->add_option("--mode", mode)->check(CLI::IsMember({"er", "milliken"}));
    classify->add_option("--b", b);
    classify->add_option("--m", m);
    classify->add_option("--n", n);
    classify->add_option("--height", height);
    classify->add_option("--min-witness", min_witness);
    classify->add_option("--gen", gen);
    classify->add_option("--seed", seed);

    auto* witness = app.add_subcommand("witness", "pigeonhole witness searches");
    witness->add_option("--kind", kind)->check(CLI::IsMember({"pigeonhole", "hl", "a4"}));
    witness->add_option("--b", b);
    witness->add_option("--m", m);
    witness->add_option("--n", n);
    witness->add_option("--k", k);
    witness->add_option("--p", p);
    witness->add_option("--gen", gen);
    witness->add_option("--pred", pred);
    witness->add_option("--prefix", prefix_text);
    witness->add_option("--seed", seed);
    witness->add_option("--bound-candidates", bound_candidates);

    auto* export_dot = app.add_subcommand("export-dot", "render a universe and witness as DOT");
    export_dot->add_option("--b", b);
    export_dot->add_option("--m", m);
    export_dot->add_option("--d", d);
    export_dot->add_option("--nodes", node_lists);

    auto* axioms = app.add_subcommand("axioms", "randomized axiom harness");
    axioms->add_option("--seed", seed);
    axioms->add_option("--trials", trials);
    axioms->add_option("--depth", depth);
    axioms->add_option("--mutate", mutate_what)->check(CLI::IsMember({"fin-leq"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (enumerate->parsed()) {
        Universe u = Universe::full(b, m);
        json params{{"b", b}, {"m", m}};
        json result;
        if (!levels_text.empty()) {
            std::vector<int> L = parse_levels(levels_text);
            auto members = enum_with_levels(u, L);
            params["levels"] = L;
            FamilySnapshot snap{b, static_cast<int>(L.size()), members};
            result = to_json(snap);
        } else {
            params["n"] = n;
            result = to_json(enum_strong_subtrees(u, n));
        }
        std::cout << "count " << result["count"] << "\n";
        emit("enumerate", params, seed, json{{"m", m}}, result["count"].get<std::size_t>(),
             result);
        return 0;
    }

    if (classify->parsed()) {
        if (mode == "er") {
            if (min_witness < 0) min_witness = m;
            SetColoring c = make_set_coloring(gen, seed);
            auto w = er_classify(c, m, n, min_witness);
            json params{{"mode", "er"}, {"m", m}, {"n", n},
                        {"min-witness", min_witness}, {"gen", gen}};
            json result;
            if (w) {
                bool ok = er_verify(c, w->X, n, w->I);
                if (!ok) throw TreeError(ErrorCode::ConstraintViolation, "witness failed verify");
                result = json{{"status", "witness"}, {"X", w->X}, {"I", w->I},
                              {"verified", ok}};
                emit("classify", params, seed, json{{"m", m}}, w->candidates_examined, result);
            } else {
                result = json{{"status", "none"}};
                emit("classify", params, seed, json{{"m", m}}, 0, result);
            }
            return 0;
        }
        Universe u = Universe::full(b, m);
        if (height < 0) height = n + 1 <= u.height() ? n + 1 : n;
        auto members = enum_strong_subtrees(u, n).members;
        Coloring c = make_tree_coloring(gen, u, members, seed);
        auto w = milliken_classify(u, c, n, height);
        json params{{"mode", "milliken"}, {"b", b}, {"m", m}, {"n", n},
                    {"height", height}, {"gen", gen}};
        if (w) {
            bool ok = milliken_verify(c, w->T, n, w->nls.N, w->nls.L);
            if (!ok) throw TreeError(ErrorCode::ConstraintViolation, "witness failed verify");
            json result{{"status", "witness"}, {"T", to_json(w->T)}, {"nls", to_json(w->nls)},
                        {"verified", ok}};
            emit("classify", params, seed, json{{"height", height}}, w->candidates_examined,
                 result);
        } else {
            emit("classify", params, seed, json{{"height", height}}, 0,
                 json{{"status", "none"}});
        }
        return 0;
    }

    if (witness->parsed()) {
        Universe u = Universe::full(b, m);
        if (kind == "pigeonhole") {
            auto members = enum_strong_subtrees(u, n).members;
            Coloring c = make_tree_coloring(gen, u, members, seed);
            auto w = milliken_witness(u, c, n, k);
            json params{{"kind", kind}, {"b", b}, {"m", m}, {"n", n}, {"k", k}, {"gen", gen}};
            if (w)
                emit("witness", params, seed, json{{"k", k}}, w->candidates_examined,
                     json{{"status", "witness"}, {"T", to_json(w->T)}, {"color", w->color}});
            else
                emit("witness", params, seed, json{{"k", k}}, 0, json{{"status", "none"}});
            return 0;
        }
        if (kind == "hl") {
            LevelProductColoring lpc;
            lpc.parts.assign(static_cast<std::size_t>(p), u);
            if (gen == "common-level-parity")
                lpc.color = [](const std::vector<Node>& t) {
                    return t.front().level() % 2 == 0 ? std::string("even") : std::string("odd");
                };
            else if (gen == "constant")
                lpc.color = [](const std::vector<Node>&) { return std::string("c0"); };
            else if (gen == "seeded-random")
                lpc.color = [seed](const std::vector<Node>& t) {
                    std::string s;
                    for (const Node& x : t) s += to_string(x) + ",";
                    return "s" + std::to_string(fnv(s, seed) % 2);
                };
            else
                throw TreeError(ErrorCode::ConstraintViolation,
                                "unknown level-product generator: " + gen);
            auto w = hl_witness(lpc, k);
            json params{{"kind", kind}, {"b", b}, {"m", m}, {"p", p}, {"k", k}, {"gen", gen}};
            if (w) {
                json trees = json::array();
                for (const auto& t : w->trees) trees.push_back(to_json(t));
                emit("witness", params, seed, json{{"k", k}}, w->candidates_examined,
                     json{{"status", "witness"}, {"trees", trees}, {"color", w->color}});
            } else {
                emit("witness", params, seed, json{{"k", k}}, 0, json{{"status", "none"}});
            }
            return 0;
        }
        // kind == "a4"
        StrongSubtree X = prefix_text.empty()
                              ? StrongSubtree::empty_tree(b)
                              : validate_strong_subtree(u, parse_nodes(prefix_text));
        std::function<bool(const StrongSubtree&)> O;
        if (pred == "all")
            O = [](const StrongSubtree&) { return true; };
        else if (pred == "none")
            O = [](const StrongSubtree&) { return false; };
        else if (pred == "max-level-even")
            O = [&u](const StrongSubtree& ext) {
                return u.level_of(ext.nodes().back()).value() % 2 == 0;
            };
        else if (pred == "seeded")
            O = [seed](const StrongSubtree& ext) {
                std::string s;
                for (const Node& t : ext.nodes()) s += to_string(t) + "|";
                return fnv(s, seed) % 2 == 0;
            };
        else
            throw TreeError(ErrorCode::ConstraintViolation, "unknown predicate: " + pred);
        auto r = a4_step(u, O, X);
        json params{{"kind", kind}, {"b", b}, {"m", m}, {"pred", pred},
                    {"prefix", prefix_text}};
        if (r)
            emit("witness", params, seed, json{{"m", m}}, 0,
                 json{{"status", "witness"},
                      {"T", to_json(r->T)},
                      {"side", r->side == DichotomySide::Inside ? "inside" : "outside"},
                      {"part_height", r->part_height}});
        else
            emit("witness", params, seed, json{{"m", m}}, 0, json{{"status", "none"}});
        return 0;
    }

    if (export_dot->parsed()) {
        if (d < 1 || static_cast<int>(node_lists.size()) > d)
            throw TreeError(ErrorCode::ConstraintViolation, "bad node-list arity");
        if (d == 1) {
            std::vector<Node> hot =
                node_lists.empty() ? std::vector<Node>{} : parse_nodes(node_lists.front());
            std::cout << to_dot(Universe::full(b, m), hot);
        } else {
            std::vector<Universe> us(static_cast<std::size_t>(d), Universe::full(b, m));
            std::vector<std::vector<Node>> hot;
            for (const auto& t : node_lists) hot.push_back(parse_nodes(t));
            std::cout << to_dot(us, hot);
        }
        return 0;
    }

    // axioms
    AxiomsReport rep = axioms_check(seed, trials, depth, mutate_what == "fin-leq");
    json params{{"trials", trials}, {"depth", depth}, {"mutate", mutate_what}};
    emit("axioms", params, seed, json{{"depth", depth}},
         static_cast<std::size_t>(rep.total_instances()), to_json(rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const TreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
