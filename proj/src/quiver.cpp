#include "singcat/quiver.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace singcat {

namespace {

bool is_punct(char c) { return c == ';' || c == ':' || c == ',' || c == '#'; }

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (s.find("->") != std::string::npos) return false;
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c)) || is_punct(c)) return false;
    return true;
}

void check_identifier(const std::string& s, const char* what) {
    if (!valid_identifier(s))
        throw Error("invalid-identifier", std::string("invalid ") + what + " identifier '" + s + "'",
                    json{{"identifier", s}});
}

}  // namespace

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i + 1])
            throw Error("duplicate-vertex", "vertex '" + vertices_[i] + "' declared twice",
                        json{{"vertex", vertices_[i]}});
    for (const auto& v : vertices_) check_identifier(v, "vertex");

    std::sort(arrows_.begin(), arrows_.end(),
              [](const Arrow& a, const Arrow& b) { return a.label < b.label; });
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        check_identifier(a.label, "arrow");
        if (i + 1 < arrows_.size() && a.label == arrows_[i + 1].label)
            throw Error("duplicate-arrow", "arrow '" + a.label + "' declared twice",
                        json{{"arrow", a.label}});
        for (const auto* end : {&a.source, &a.target})
            if (!has_vertex(*end))
                throw Error("undeclared-vertex",
                            "arrow '" + a.label + "' uses undeclared vertex '" + *end + "'",
                            json{{"arrow", a.label}, {"vertex", *end}});
        index_[a.label] = i;
    }
}

bool Quiver::has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Quiver::has_arrow(const std::string& label) const { return index_.count(label) > 0; }

const Arrow& Quiver::arrow(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw Error("undeclared-arrow", "unknown arrow '" + label + "'", json{{"arrow", label}});
    return arrows_[it->second];
}

std::vector<const Arrow*> Quiver::outgoing(const std::string& v) const {
    std::vector<const Arrow*> out;
    for (const auto& a : arrows_)
        if (a.source == v) out.push_back(&a);
    return out;
}

std::vector<const Arrow*> Quiver::incoming(const std::string& v) const {
    std::vector<const Arrow*> in;
    for (const auto& a : arrows_)
        if (a.target == v) in.push_back(&a);
    return in;
}

// ---------------------------------------------------------------- Path

Path Path::lazy(const std::string& v) {
    Path p;
    p.source_ = p.target_ = v;
    return p;
}

Path Path::of(const Quiver& q, const std::vector<std::string>& labels) {
    if (labels.empty()) throw Error("empty-path", "a lazy path needs an explicit base vertex");
    Path p;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const Arrow& a = q.arrow(labels[k]);
        if (k == 0)
            p.source_ = a.source;
        else if (p.target_ != a.source)
            throw Error("non-composable",
                        "arrow '" + labels[k] + "' does not start where '" + labels[k - 1] + "' ends",
                        json{{"first", labels[k - 1]}, {"second", labels[k]}});
        p.target_ = a.target;
        p.arrows_.push_back(labels[k]);
    }
    return p;
}

std::string Path::display() const {
    if (arrows_.empty()) return "e_" + source_;
    std::string s;
    for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) s += *it;
    return s;
}

Path compose(const Path& p, const Path& q) {
    if (p.target() != q.source())
        throw Error("non-composable",
                    "cannot compose " + p.display() + " (ending at " + p.target() + ") with " +
                        q.display() + " (starting at " + q.source() + ")",
                    json{{"first", to_json(p)}, {"second", to_json(q)}});
    if (p.is_lazy()) return q;
    if (q.is_lazy()) return p;
    Path r = p;
    r.arrows_.insert(r.arrows_.end(), q.arrows_.begin(), q.arrows_.end());
    r.target_ = q.target_;
    return r;
}

// ---------------------------------------------------------------- Presentation

Presentation::Presentation(Quiver q, std::vector<Relation> relations)
    : quiver_(std::move(q)), relations_(std::move(relations)) {
    for (const auto& [a, b] : relations_) {
        const Arrow& x = quiver_.arrow(a);
        const Arrow& y = quiver_.arrow(b);
        if (x.target != y.source)
            throw Error("non-composable",
                        "relation " + b + a + ": '" + a + "' ends at " + x.target + " but '" + b +
                            "' starts at " + y.source,
                        json{{"relation", {a, b}}});
        if (!lookup_.insert({a, b}).second)
            throw Error("duplicate-relation", "relation " + b + a + " listed twice",
                        json{{"relation", {a, b}}});
    }
    std::sort(relations_.begin(), relations_.end());
}

bool Presentation::is_relation(const std::string& a, const std::string& b) const {
    return lookup_.count({a, b}) > 0;
}

bool path_in_ideal(const Path& p, const Presentation& P) {
    const auto& arrows = p.arrows();
    for (const auto& l : arrows)
        if (!P.quiver().has_arrow(l))
            throw Error("foreign-path", "path uses arrow '" + l + "' not in this quiver",
                        json{{"arrow", l}});
    for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
        if (P.is_relation(arrows[k], arrows[k + 1])) return true;
    return false;
}

// ---------------------------------------------------------------- words

std::optional<std::vector<std::string>> split_word(const Quiver& q, const std::string& word) {
    const std::size_t n = word.size();
    // ways[i]: number of ways (capped at 2) to split word[i..] into labels.
    std::vector<int> ways(n + 1, 0);
    std::vector<std::size_t> next(n + 1, 0);
    ways[n] = 1;
    for (std::size_t i = n; i-- > 0;) {
        for (const auto& a : q.arrows()) {
            const auto& l = a.label;
            if (word.compare(i, l.size(), l) == 0 && ways[i + l.size()] > 0) {
                ways[i] = std::min(2, ways[i] + ways[i + l.size()]);
                next[i] = i + l.size();
            }
        }
    }
    if (n == 0 || ways[0] != 1) return std::nullopt;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; i = next[i]) labels.push_back(word.substr(i, next[i] - i));
    std::reverse(labels.begin(), labels.end());
    return labels;
}

// ---------------------------------------------------------------- text format

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
    bool punct = false;
};

[[noreturn]] void syntax_error(int line, int column, const std::string& what) {
    throw Error("syntax", "line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + what,
                json{{"line", line}, {"column", column}});
}

[[noreturn]] void syntax_error(const Token& t, const std::string& what) {
    syntax_error(t.line, t.column, what);
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j, ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            if (c == '\n') {
                ++line;
                column = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++column;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (c == ';' || c == ':' || c == ',') {
            out.push_back({std::string(1, c), line, column, true});
            advance(1);
        } else if (text.compare(i, 2, "->") == 0) {
            out.push_back({"->", line, column, true});
            advance(2);
        } else {
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
                   !is_punct(text[j]) && text.compare(j, 2, "->") != 0)
                ++j;
            out.push_back({text.substr(i, j - i), line, column, false});
            advance(j - i);
        }
    }
    return out;
}

struct PendingRelation {
    std::vector<Token> words;  // one juxtaposed word, or two labels "b a"
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Presentation run() {
        while (pos_ < toks_.size()) statement();
        Quiver q;
        q = build_quiver();
        std::vector<Relation> rels;
        std::set<Relation> seen;
        for (const auto& pr : relations_) {
            Relation r = resolve(q, pr);
            if (!seen.insert(r).second)
                syntax_error(pr.words.front(), "duplicate relation " + r.second + r.first);
            const Arrow& a = q.arrow(r.first);
            const Arrow& b = q.arrow(r.second);
            if (a.target != b.source) {
                const Token& t = pr.words.front();
                throw Error("non-composable",
                            "line " + std::to_string(t.line) + ", column " +
                                std::to_string(t.column) + ": relation " + r.second + r.first +
                                " is not a path ('" + r.first + "' ends at " + a.target + ", '" +
                                r.second + "' starts at " + b.source + ")",
                            json{{"line", t.line}, {"column", t.column}, {"relation", {r.first, r.second}}});
            }
            rels.push_back(r);
        }
        return Presentation(std::move(q), std::move(rels));
    }

private:
    const Token& peek() const {
        if (pos_ >= toks_.size()) {
            const Token& last = toks_.back();
            syntax_error(last.line, last.column + static_cast<int>(last.text.size()),
                         "unexpected end of input");
        }
        return toks_[pos_];
    }
    bool at(const char* p) const { return pos_ < toks_.size() && toks_[pos_].punct && toks_[pos_].text == p; }
    Token expect_punct(const char* p) {
        const Token& t = peek();
        if (!t.punct || t.text != p) syntax_error(t, std::string("expected '") + p + "', found '" + t.text + "'");
        ++pos_;
        return t;
    }
    Token expect_ident(const char* what) {
        const Token& t = peek();
        if (t.punct) syntax_error(t, std::string("expected ") + what + ", found '" + t.text + "'");
        ++pos_;
        return t;
    }

    void statement() {
        Token kw = expect_ident("a keyword");
        if (kw.text == "vertices") {
            while (!at(";")) {
                Token v = expect_ident("a vertex identifier");
                if (vertex_pos_.count(v.text)) syntax_error(v, "vertex '" + v.text + "' declared twice");
                vertex_pos_[v.text] = v;
            }
            expect_punct(";");
        } else if (kw.text == "arrow") {
            arrow_decl();
            expect_punct(";");
        } else if (kw.text == "arrows") {
            if (!at(";")) {
                arrow_decl();
                while (at(",")) {
                    ++pos_;
                    arrow_decl();
                }
            }
            expect_punct(";");
        } else if (kw.text == "relation") {
            relation_item();
            expect_punct(";");
        } else if (kw.text == "relations") {
            if (!at(";")) {
                relation_item();
                while (at(",")) {
                    ++pos_;
                    relation_item();
                }
            }
            expect_punct(";");
        } else {
            syntax_error(kw, "unknown keyword '" + kw.text + "'");
        }
    }

    void arrow_decl() {
        Token label = expect_ident("an arrow label");
        expect_punct(":");
        Token src = expect_ident("a source vertex");
        expect_punct("->");
        Token tgt = expect_ident("a target vertex");
        for (const auto& a : arrows_)
            if (a[0].text == label.text) syntax_error(label, "arrow '" + label.text + "' declared twice");
        arrows_.push_back({label, src, tgt});
    }

    void relation_item() {
        PendingRelation pr;
        pr.words.push_back(expect_ident("a relation"));
        if (!at(";") && !at(",")) pr.words.push_back(expect_ident("a relation"));
        if (!at(";") && !at(",")) syntax_error(peek(), "a relation has at most two words");
        relations_.push_back(std::move(pr));
    }

    Quiver build_quiver() {
        std::vector<std::string> vs;
        for (const auto& [v, _] : vertex_pos_) vs.push_back(v);
        std::vector<Arrow> as;
        for (const auto& a : arrows_) {
            for (int k : {1, 2})
                if (!vertex_pos_.count(a[k].text))
                    throw Error("undeclared-vertex",
                                "line " + std::to_string(a[k].line) + ", column " +
                                    std::to_string(a[k].column) + ": undeclared vertex '" + a[k].text + "'",
                                json{{"line", a[k].line}, {"column", a[k].column}, {"vertex", a[k].text}});
            as.push_back({a[0].text, a[1].text, a[2].text});
        }
        try {
            return Quiver(std::move(vs), std::move(as));
        } catch (const Error& e) {
            if (e.code() != "invalid-identifier") throw;
            const std::string bad = e.witness()["identifier"];
            for (const auto& t : toks_)
                if (t.text == bad) syntax_error(t, e.what());
            throw;
        }
    }

    Relation resolve(const Quiver& q, const PendingRelation& pr) {
        auto undeclared = [](const Token& t, const std::string& label) -> Error {
            return Error("undeclared-arrow",
                         "line " + std::to_string(t.line) + ", column " + std::to_string(t.column) +
                             ": undeclared arrow '" + label + "'",
                         json{{"line", t.line}, {"column", t.column}, {"arrow", label}});
        };
        if (pr.words.size() == 2) {
            // "b a": display order, so a is applied first.
            for (const auto& t : pr.words)
                if (!q.has_arrow(t.text)) throw undeclared(t, t.text);
            return {pr.words[1].text, pr.words[0].text};
        }
        const Token& t = pr.words[0];
        auto split = split_word(q, t.text);
        if (!split) {
            // Ambiguous only if two different splits into declared arrows exist.
            int splits = 0;
            for (std::size_t k = 1; k < t.text.size(); ++k)
                if (q.has_arrow(t.text.substr(0, k)) && q.has_arrow(t.text.substr(k))) ++splits;
            if (splits < 2) throw undeclared(t, t.text);
            syntax_error(t, "relation '" + t.text +
                                "' does not split uniquely into two declared arrows; write it as 'b a'");
        }
        if (split->size() != 2) {
            if (split->size() == 1) throw undeclared(t, t.text);
            syntax_error(t, "relation '" + t.text + "' has length " + std::to_string(split->size()) +
                                "; only length-two relations are supported");
        }
        return {(*split)[0], (*split)[1]};
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, Token> vertex_pos_;
    std::vector<std::array<Token, 3>> arrows_;
    std::vector<PendingRelation> relations_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    auto toks = tokenize(text);
    if (toks.empty()) syntax_error(1, 1, "empty presentation");
    return Parser(std::move(toks)).run();
}

std::string serialize(const Presentation& P) {
    const Quiver& q = P.quiver();
    std::string s = "vertices";
    for (const auto& v : q.vertices()) s += " " + v;
    s += ";\n";
    for (const auto& a : q.arrows()) s += "arrow " + a.label + ": " + a.source + " -> " + a.target + ";\n";
    for (const auto& [a, b] : P.relations()) {
        auto split = split_word(q, b + a);
        bool juxtapose = split && split->size() == 2 && (*split)[0] == a && (*split)[1] == b;
        s += "relation " + (juxtapose ? b + a : b + " " + a) + ";\n";
    }
    return s;
}

json to_json(const Path& p) {
    json j;
    j["arrows"] = p.arrows();
    j["source"] = p.source();
    j["target"] = p.target();
    j["display"] = p.display();
    return j;
}

json to_json(const Presentation& P) {
    json j;
    j["vertices"] = P.quiver().vertices();
    j["arrows"] = json::array();
    for (const auto& a : P.quiver().arrows())
        j["arrows"].push_back({{"label", a.label}, {"source", a.source}, {"target", a.target}});
    j["relations"] = json::array();
    for (const auto& [a, b] : P.relations()) j["relations"].push_back({a, b});
    return j;
}

Presentation presentation_from_json(const json& j) {
    try {
        std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
        std::vector<Arrow> as;
        for (const auto& a : j.at("arrows"))
            as.push_back({a.at("label").get<std::string>(), a.at("source").get<std::string>(),
                          a.at("target").get<std::string>()});
        std::vector<Relation> rs;
        for (const auto& r : j.at("relations")) {
            if (!r.is_array() || r.size() != 2) throw Error("bad-json", "relations must be label pairs");
            rs.push_back({r[0].get<std::string>(), r[1].get<std::string>()});
        }
        return Presentation(Quiver(std::move(vs), std::move(as)), std::move(rs));
    } catch (const json::exception& e) {
        throw Error("bad-json", std::string("malformed presentation JSON: ") + e.what());
    }
}

}  // namespace singcat
