#include "singcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "singcat/dga.hpp"
#include "singcat/gentle.hpp"
#include "singcat/nodal.hpp"
#include "singcat/quiver.hpp"
#include "singcat/surface.hpp"

namespace singcat::cli {

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot read '" + path + "'", json{{"path", path}});
    ss << in.rdbuf();
    return ss.str();
}

// "a..b" with optional signs.
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("range must look like a..b, got '" + s + "'");
    try {
        std::size_t u1, u2;
        std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
        int a = std::stoi(lo, &u1), b = std::stoi(hi, &u2);
        if (u1 != lo.size() || u2 != hi.size()) throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::exception&) {
        throw UsageError("range must look like a..b, got '" + s + "'");
    }
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ','))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

// Flat "key: value" rendering for --format text.
std::string as_text(const json& j) {
    if (!j.is_object()) return j.dump() + "\n";
    std::string s;
    for (const auto& [k, v] : j.items()) s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return s;
}

json vertex_map(const surface::DualGraph& G, const std::vector<long long>& values) {
    json j = json::object();
    for (std::size_t i = 0; i < G.size(); ++i) j[G.ids()[i]] = values[i];
    return j;
}

struct Options {
    std::string format = "json";
    std::string out_file;
    std::optional<std::uint64_t> seed;
};

struct Outcome {
    json result;
    std::string text;  // preferred text rendering, if any
};

class Cli {
public:
    Cli() : app_("singcat: invariants of gentle algebras, nodal categories, rational surfaces and dg Auslander algebras") {
        app_.require_subcommand(1);
        app_.add_option("--format", opt_.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        app_.add_option("--out", opt_.out_file, "Write the result to this file");
        app_.add_option("--seed", seed_value_, "Seed for randomized runs");
        build_gentle();
        build_nodal();
        build_surface();
        build_dga();
        build_corpus();
    }

    int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
        std::reverse(args.begin(), args.end());
        try {
            app_.parse(args);
        } catch (const CLI::CallForHelp&) {
            out << app_.help();
            return Ok;
        } catch (const CLI::CallForAllHelp&) {
            out << app_.help("", CLI::AppFormatMode::All);
            return Ok;
        } catch (const CLI::ParseError& e) {
            err << "singcat: " << e.what() << "\n";
            return UsageFailure;
        }
        if (app_.count("--seed")) opt_.seed = seed_value_;
        Outcome o;
        int status = Ok;
        try {
            if (!action_) throw UsageError("no operation given");
            status = action_(o);
        } catch (const UsageError& e) {
            err << "singcat: " << e.what() << "\n";
            return UsageFailure;
        } catch (const Error& e) {
            o.result = e.to_json();
            o.text = std::string("error: ") + e.code() + ": " + e.what() + "\n";
            status = DomainError;
        }
        std::string rendered = opt_.format == "text" ? (o.text.empty() ? as_text(o.result) : o.text)
                                                     : o.result.dump(2) + "\n";
        if (!opt_.out_file.empty()) {
            std::ofstream f(opt_.out_file);
            if (!f) {
                err << "singcat: cannot write '" << opt_.out_file << "'\n";
                return UsageFailure;
            }
            f << rendered;
        } else {
            out << rendered;
        }
        if (status == DomainError && o.result.contains("error"))
            err << "singcat: " << o.result["error"].get<std::string>() << ": "
                << o.result["message"].get<std::string>() << "\n";
        return status;
    }

private:
    CLI::App* module(const std::string& name, const std::string& help) {
        CLI::App* m = app_.add_subcommand(name, help);
        m->require_subcommand(1);
        m->fallthrough();
        return m;
    }
    CLI::App* op(CLI::App* m, const std::string& name, const std::string& help,
                 std::function<int(Outcome&)> action) {
        CLI::App* s = m->add_subcommand(name, help);
        s->fallthrough();
        s->callback([this, action] { action_ = action; });
        return s;
    }

    // A presentation from a file argument or --inline text; exactly one.
    void presentation_input(CLI::App* s, std::string& file, std::string& inline_text) {
        s->add_option("file", file, "Presentation file ('-' for stdin)");
        s->add_option("--inline", inline_text, "Presentation text given directly");
    }
    static Presentation load_presentation(const std::string& file, const std::string& inline_text) {
        if (file.empty() == inline_text.empty())
            throw UsageError("give exactly one of a presentation file or --inline text");
        return parse_presentation(file.empty() ? inline_text : read_input(file));
    }

    void build_gentle() {
        CLI::App* m = module("gentle", "Gentle algebras: checks, critical cycles, Gorenstein projectives");
        auto single = [&](const std::string& name, const std::string& help,
                          std::function<json(const Presentation&)> f, std::function<std::string(const Presentation&)> text = {}) {
            auto* s = op(m, name, help, [this, f, text](Outcome& o) {
                Presentation P = load_presentation(file_, inline_);
                o.result = f(P);
                if (text) o.text = text(P);
                return Ok;
            });
            presentation_input(s, file_, inline_);
        };
        single("check", "Check conditions (G1)-(G4)", [](const Presentation& P) {
            return gentle::to_json(gentle::check_gentle(P));
        });
        single(
            "cycles", "List the critical cycles",
            [](const Presentation& P) { return gentle::to_json(gentle::critical_cycles(P)); },
            [](const Presentation& P) {
                std::string t;
                for (const auto& c : gentle::critical_cycles(P))
                    t += c.display() + " (length " + std::to_string(c.length()) + ")\n";
                return t;
            });
        single("gp", "Indecomposable Gorenstein-projective modules", [](const Presentation& P) {
            return gentle::to_json(gentle::gorenstein_projectives(P));
        });
        single("singcat", "Singularity category factors", [](const Presentation& P) {
            return gentle::to_json(gentle::singularity_category(P));
        });
        single("show", "Canonical form of a presentation", [](const Presentation& P) { return to_json(P); },
               [](const Presentation& P) { return serialize(P); });

        auto* cmp = op(m, "compare", "Compare the singularity-category invariant of two algebras", [this](Outcome& o) {
            Presentation a = parse_presentation(read_input(file_));
            Presentation b = parse_presentation(read_input(file2_));
            o.result = gentle::to_json(gentle::compare_invariant(a, b));
            return Ok;
        });
        cmp->add_option("first", file_, "First presentation file")->required();
        cmp->add_option("second", file2_, "Second presentation file")->required();
    }

    void build_nodal() {
        CLI::App* m = module("nodal", "The nodal and zero-dimensional A1 blocks");
        auto* hom = op(m, "hom", "Hom dimension between two indecomposables", [this](Outcome& o) {
            const bool zx = nodal::is_zero_block_syntax(obj_a_), zy = nodal::is_zero_block_syntax(obj_b_);
            if (zx != zy) throw UsageError("both objects must lie in the same block");
            int d = zx ? nodal::hom_dim_zero(nodal::parse_zero_object(obj_a_), nodal::parse_zero_object(obj_b_))
                       : nodal::hom_dim(nodal::parse_object(obj_a_), nodal::parse_object(obj_b_));
            o.result = {{"dim", d}};
            return Ok;
        });
        hom->add_option("X", obj_a_, "Source object, e.g. P+[1] or S-(2)[-1]")->required();
        hom->add_option("Y", obj_b_, "Target object")->required();

        auto* table = op(m, "table", "Hom dimensions between all indecomposables in a window", [this](Outcome& o) {
            auto [lo, hi] = parse_range(shifts_);
            if (maxlen_ < 1) throw UsageError("--maxlen must be at least 1");
            auto objs = nodal::window(lo, hi, maxlen_);
            json names = json::array(), rows = json::array();
            for (const auto& x : objs) {
                names.push_back(x.str());
                json row = json::array();
                for (const auto& y : objs) row.push_back(nodal::hom_dim(x, y));
                rows.push_back(row);
            }
            o.result = {{"objects", names}, {"dims", rows}};
            return Ok;
        });
        table->add_option("--shifts", shifts_, "Shift range a..b (use --shifts=-4..4 for negative a)")->required();
        table->add_option("--maxlen", maxlen_, "Largest string length")->required();

        auto* cx = op(m, "complex", "Minimal string complex S+(l) or S-(l)", [this](Outcome& o) {
            nodal::Indecomposable X = nodal::parse_object(obj_a_);
            if (X.is_projective() || X.shift != 0) throw UsageError("expected S+(l) or S-(l)");
            o.result = nodal::to_json(nodal::minimal_string_complex(X.sign, X.length));
            return Ok;
        });
        cx->add_option("S", obj_a_, "Minimal string")->required();

        auto* k0 = op(m, "k0", "Class in K0 on the basis [P+], [P-]", [this](Outcome& o) {
            nodal::Object X;
            for (const auto& s : objs_) X.push_back(nodal::parse_object(s));
            auto c = nodal::k0_class(X);
            o.result = {{"class", {c[0], c[1]}}};
            return Ok;
        });
        k0->add_option("X", objs_, "Summands of the object")->required();

        auto* cl = op(m, "cluster", "Membership in the cluster subcategory", [this](Outcome& o) {
            o.result = {{"member", nodal::cluster_member(nodal::parse_object(obj_a_))}};
            return Ok;
        });
        cl->add_option("X", obj_a_, "Indecomposable")->required();

        auto* ar = op(m, "ar", "Window of an Auslander-Reiten component", [this](Outcome& o) {
            static const std::map<std::string, nodal::Component> names{
                {"string-plus", nodal::Component::StringPlus},
                {"string-minus", nodal::Component::StringMinus},
                {"projective-plus", nodal::Component::ProjectivePlus},
                {"projective-minus", nodal::Component::ProjectiveMinus}};
            auto it = names.find(component_);
            if (it == names.end()) throw UsageError("unknown component '" + component_ + "'");
            auto [lo, hi] = parse_range(shifts_);
            o.result = nodal::to_json(nodal::ar_window(it->second, lo, hi, maxlen_));
            return Ok;
        });
        ar->add_option("component", component_, "string-plus, string-minus, projective-plus or projective-minus")
            ->required();
        ar->add_option("--shifts", shifts_, "Shift range a..b")->required();
        ar->add_option("--maxlen", maxlen_, "Largest string length");
    }

    void build_surface() {
        CLI::App* m = module("surface", "Dual graphs of rational surface singularities");
        auto* cyc = op(m, "cyclic", "Jung-Hirzebruch expansion and dual graph of 1/n(1,a)", [this](Outcome& o) {
            auto alphas = surface::jung_hirzebruch(n_, a_);
            surface::Rational value = surface::evaluate_continued_fraction(alphas);
            o.result = {{"n", n_},
                        {"a", a_},
                        {"expansion", alphas},
                        {"value", surface::to_string(value)},
                        {"graph", surface::to_json(surface::cyclic_dual_graph(n_, a_))}};
            o.text = surface::serialize(surface::cyclic_dual_graph(n_, a_));
            return Ok;
        });
        cyc->add_option("n", n_)->required();
        cyc->add_option("a", a_)->required();

        auto* fc = op(m, "fundamental", "Fundamental cycle by Laufer's algorithm", [this](Outcome& o) {
            auto G = surface::parse_graph(read_input(file_));
            std::optional<std::mt19937_64> rng;
            if (opt_.seed) rng.emplace(*opt_.seed);
            auto Z = surface::fundamental_cycle(G, rng ? &*rng : nullptr);
            std::vector<long long> products;
            for (std::size_t i = 0; i < G.size(); ++i) products.push_back(surface::intersect(G, Z, i));
            o.result = {{"fundamental_cycle", vertex_map(G, Z)}, {"intersections", vertex_map(G, products)}};
            return Ok;
        });
        fc->add_option("graph", file_, "Graph file")->required();

        auto* dec = op(m, "decompose", "ADE blocks after contracting (-2)-curves", [this](Outcome& o) {
            auto G = surface::parse_graph(read_input(file_));
            if (!contract_.empty() && all_minus_two_)
                throw UsageError("--contract and --all-minus-two are exclusive");
            surface::Decomposition d;
            if (!contract_.empty()) {
                std::set<std::size_t> S;
                for (const auto& id : split_commas(contract_)) S.insert(G.index_of(id));
                d = surface::decompose(G, S);
            } else {
                d = surface::decompose_all_minus_two(G);
            }
            o.result = surface::to_json(d, G);
            return Ok;
        });
        dec->add_option("graph", file_, "Graph file")->required();
        dec->add_option("--contract", contract_, "Comma-separated vertices to contract");
        dec->add_flag("--all-minus-two", all_minus_two_, "Contract every (-2)-curve (default)");

        auto* rk = op(m, "ranks", "Ranks of special CM modules and related data", [this](Outcome& o) {
            auto G = surface::parse_graph(read_input(file_));
            json pi = json::array();
            for (std::size_t i : surface::projective_injective_vertices(G)) pi.push_back(G.ids()[i]);
            o.result = {{"ranks", vertex_map(G, surface::special_ranks(G))},
                        {"projective_injective", pi},
                        {"free_module_projective_injective", true},
                        {"syzygy_multiplicities", vertex_map(G, surface::canonical_syzygy_multiplicities(G))}};
            return Ok;
        });
        rk->add_option("graph", file_, "Graph file")->required();

        auto* val = op(m, "validate", "Check tree shape, weights and negative definiteness", [this](Outcome& o) {
            auto G = surface::parse_graph(read_input(file_));
            bool weights_ok = std::all_of(G.weights().begin(), G.weights().end(), [](int w) { return w <= -2; });
            o.result = {{"is_tree", G.is_tree()},
                        {"weights_at_most_minus_two", weights_ok},
                        {"negative_definite", surface::is_negative_definite(G)}};
            surface::validate(G);
            return Ok;
        });
        val->add_option("graph", file_, "Graph file")->required();
    }

    void build_dga() {
        CLI::App* m = module("dga", "dg Auslander algebras of ADE singularities");
        auto* emit = op(m, "emit", "Graded quiver and differential", [this](Outcome& o) {
            surface::ADEType t = surface::parse_ade(type_);
            dga::Parity p;
            if (dim_ == "even")
                p = dga::Parity::Even;
            else if (dim_ == "odd")
                p = dga::Parity::Odd;
            else {
                int d;
                try {
                    std::size_t used;
                    d = std::stoi(dim_, &used);
                    if (used != dim_.size()) throw std::invalid_argument(dim_);
                } catch (const std::exception&) {
                    throw UsageError("expected a Krull dimension or even/odd, got '" + dim_ + "'");
                }
                p = dga::knoerrer_parity(d);
            }
            auto q = dga::dg_auslander(t, p);
            o.result = dga::to_json(q);
            o.text = dga::to_text(q);
            return Ok;
        });
        emit->add_option("type", type_, "A<n>, D<n> or E<n>")->required();
        emit->add_option("dimension", dim_, "Krull dimension or parity")->required();
    }

    void build_corpus() {
        auto* c = app_.add_subcommand("corpus", "Run an examples corpus");
        c->fallthrough();
        c->add_option("dir", file_, "Corpus directory")->required();
        c->callback([this] {
            action_ = [this](Outcome& o) {
                CorpusReport r = run_corpus(file_);
                o.result = to_json(r);
                for (const auto& k : r.cases) o.text += k.status + " " + k.name + (k.detail.empty() ? "" : ": " + k.detail) + "\n";
                o.text += std::to_string(r.count("pass")) + " passed, " + std::to_string(r.count("fail")) +
                          " failed, " + std::to_string(r.count("error")) + " errors\n";
                return r.ok() ? Ok : DomainError;
            };
        });
    }

    CLI::App app_;
    Options opt_;
    std::uint64_t seed_value_ = 0;
    std::function<int(Outcome&)> action_;

    std::string file_, file2_, inline_;
    std::string obj_a_, obj_b_, shifts_, component_, contract_, type_, dim_;
    std::vector<std::string> objs_;
    int maxlen_ = 4;
    long long n_ = 0, a_ = 0;
    bool all_minus_two_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Cli cli;
        return cli.run(args, out, err);
    } catch (const std::exception& e) {
        err << "singcat: internal error: " << e.what() << "\n";
        return DomainError;
    }
}

// ---------------------------------------------------------------- corpus

std::size_t CorpusReport::count(const std::string& status) const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.status == status; }));
}

bool json_contains(const json& actual, const json& expected) {
    if (expected.is_object()) {
        if (!actual.is_object()) return false;
        for (const auto& [k, v] : expected.items())
            if (!actual.contains(k) || !json_contains(actual[k], v)) return false;
        return true;
    }
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i)
            if (!json_contains(actual[i], expected[i])) return false;
        return true;
    }
    return actual == expected;
}

CorpusReport run_corpus(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw Error("io", "corpus directory '" + dir.string() + "' does not exist", json{{"path", dir.string()}});
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) {
        const std::string name = e.path().filename().string();
        if (e.is_regular_file() && name.size() > 10 && name.ends_with(".case.json")) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());

    CorpusReport report;
    for (const auto& f : files) {
        std::string name = f.filename().string();
        name.resize(name.size() - std::string(".case.json").size());
        json entry;
        std::vector<std::string> args;
        int want_exit = 0;
        try {
            std::ifstream in(f);
            entry = json::parse(in);
            args = entry.at("args").get<std::vector<std::string>>();
            if (entry.contains("exit")) want_exit = entry["exit"].get<int>();
            if (!entry.contains("expect")) throw std::runtime_error("missing \"expect\"");
        } catch (const std::exception& e) {
            report.cases.push_back({name, "error", std::string("unreadable case file: ") + e.what()});
            continue;
        }
        for (auto& a : args)
            for (std::size_t p; (p = a.find("{dir}")) != std::string::npos;) a.replace(p, 5, dir.string());

        std::ostringstream out, err;
        int got_exit = run(args, out, err);
        if (got_exit != want_exit) {
            report.cases.push_back({name, "fail",
                                    "exit " + std::to_string(got_exit) + ", expected " + std::to_string(want_exit) +
                                        (err.str().empty() ? "" : " (" + err.str().substr(0, err.str().find('\n')) + ")")});
            continue;
        }
        json actual;
        try {
            actual = json::parse(out.str());
        } catch (const std::exception&) {
            report.cases.push_back({name, "fail", "output is not JSON"});
            continue;
        }
        if (json_contains(actual, entry["expect"]))
            report.cases.push_back({name, "pass", ""});
        else
            report.cases.push_back({name, "fail", "output differs from expectation"});
    }
    return report;
}

json to_json(const CorpusReport& r) {
    json j;
    j["cases"] = r.cases.size();
    j["passed"] = r.count("pass");
    j["failed"] = r.count("fail");
    j["errors"] = r.count("error");
    j["results"] = json::array();
    for (const auto& c : r.cases) j["results"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    return j;
}

}  // namespace singcat::cli
