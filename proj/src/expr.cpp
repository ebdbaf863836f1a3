#include "loopcalc/expr.hpp"

#include <cctype>

#include <json.hpp>

#include "loopcalc/dlops.hpp"

namespace loopcalc {

namespace {

class Parser {
public:
    Parser(std::string_view text, const SpaceContext& space) : text_(text), space_(space) {}

    Element parse() {
        Element e = element();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view text_;
    SpaceContext space_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    int nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000) fail("number too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    Element element() {
        Element e = term();
        while (accept('+')) e.add_in_place(term());
        return e;
    }

    bool at_factor_start() {
        switch (peek()) {
        case 'Q': case 'q': case 'x': case 'z': case 's': case '(':
            return true;
        default:
            return false;
        }
    }

    Element term() {
        if (!at_factor_start()) fail("expected a factor");
        Element e = factor();
        while (at_factor_start()) e = multiply(e, factor());
        return e;
    }

    Element factor() {
        Element e = atom();
        if (accept('^')) {
            const int n = nat();
            Element p(space_, Monomial::unit());
            for (int k = 0; k < n; ++k) p = multiply(p, e);
            return p;
        }
        return e;
    }

    std::vector<int> op_list() {
        expect('[', "'['");
        std::vector<int> out;
        out.push_back(nat());
        while (accept(',')) out.push_back(nat());
        expect(']', "']'");
        return out;
    }

    Element atom() {
        const std::size_t start = pos_;
        if (accept('(')) {
            Element e = element();
            expect(')', "')'");
            return e;
        }
        bool upper = false, lower = false;
        std::vector<int> ops;
        if (peek() == 'Q') {
            ++pos_;
            upper = true;
            ops = op_list();
        } else if (peek() == 'q') {
            ++pos_;
            lower = true;
            ops = op_list();
        }
        const Generator g = generator();
        Element e(space_);
        if (lower) {
            if (space_.kind == SpaceContext::Kind::LoopSphere) {
                for (int j : ops)
                    if (j > space_.a - 1)
                        throw ParseError("lower index " + std::to_string(j) +
                                             " out of model for " + space_.name(),
                                         start);
            }
            e = convert_lower_to_upper(ops, g, space_);
        } else if (upper) {
            e = Element(space_, Monomial::single(GenMonomial{{}, g}));
            for (std::size_t k = ops.size(); k-- > 0;) e = apply_Q(ops[k], e);
        } else {
            e = Element(space_, Monomial::single(GenMonomial{{}, g}));
        }
        for (const auto& m : e.terms()) {
            if (!space_.admits(m))
                throw ParseError("class " + to_string(m) + " is not in H_*(" +
                                     space_.name() + ")",
                                 start);
        }
        return e;
    }

    Generator generator() {
        const std::size_t start = pos_;
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            const int n = nat();
            if (space_.kind != SpaceContext::Kind::QSphere &&
                space_.kind != SpaceContext::Kind::LoopSphere)
                throw ParseError("sphere generator x" + std::to_string(n) +
                                     " is not in " + space_.name(),
                                 start);
            if (n != space_.sphere_dim())
                throw ParseError("expected x" + std::to_string(space_.sphere_dim()) +
                                     " in " + space_.name(),
                                 start);
            return Generator::sphere(n);
        }
        if (c == 'z') {
            ++pos_;
            const int i = nat();
            if (space_.kind != SpaceContext::Kind::Q0S0)
                throw ParseError("zeta generator z" + std::to_string(i) +
                                     " is not in " + space_.name(),
                                 start);
            if (i < 1) throw ParseError("zeta index must be positive", start);
            return Generator::zeta(i);
        }
        if (c == 's') {
            ++pos_;
            const int m = nat();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != 'a') fail("expected 'a'");
            ++pos_;
            const int j = nat();
            if (space_.kind != SpaceContext::Kind::QStunted || m != space_.a)
                throw ParseError("stunted generator s" + std::to_string(m) + "a" +
                                     std::to_string(j) + " is not in " + space_.name(),
                                 start);
            if (j < m) throw ParseError("stunted index below the bottom cell", start);
            return Generator::stunted(m, j);
        }
        fail("expected a generator");
    }
};

} // namespace

Element parse_expr(std::string_view text, const SpaceContext& space) {
    return Parser(text, space).parse();
}

std::string to_string(const GenMonomial& gm) {
    std::string out;
    if (!gm.ops.empty()) {
        out += "Q[";
        for (std::size_t k = 0; k < gm.ops.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(gm.ops[k]);
        }
        out += ']';
    }
    switch (gm.gen.kind) {
    case GenKind::Sphere: out += 'x' + std::to_string(gm.gen.a); break;
    case GenKind::Zeta: out += 'z' + std::to_string(gm.gen.a); break;
    case GenKind::Stunted:
        out += 's' + std::to_string(gm.gen.a) + 'a' + std::to_string(gm.gen.b);
        break;
    }
    return out;
}

std::string to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t k = 0; k < m.factors.size(); ++k) {
        if (k) out += ' ';
        out += to_string(m.factors[k].first);
        if (m.factors[k].second > 1) out += '^' + std::to_string(m.factors[k].second);
    }
    return out;
}

std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& m : e.terms()) {
        if (!first) out += " + ";
        out += to_string(m);
        first = false;
    }
    return out;
}

std::string to_string(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [u, v] : t.pairs()) {
        if (!first) out += " + ";
        out += to_string(u) + " (x) " + to_string(v);
        first = false;
    }
    return out;
}

namespace {

nlohmann::json gen_json(const Generator& g) {
    switch (g.kind) {
    case GenKind::Sphere: return {{"kind", "sphere"}, {"n", g.a}};
    case GenKind::Zeta: return {{"kind", "zeta"}, {"i", g.a}};
    case GenKind::Stunted: return {{"kind", "stunted"}, {"m", g.a}, {"j", g.b}};
    }
    return {};
}

nlohmann::json mono_json(const Monomial& m) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& [gm, e] : m.factors) {
        factors.push_back({{"ops", gm.ops}, {"gen", gen_json(gm.gen)}, {"exp", e}});
    }
    return {{"factors", factors}};
}

} // namespace

std::string format_element(const Element& e, Format mode) {
    if (mode == Format::Text) return to_string(e);
    nlohmann::json doc;
    doc["space"] = e.space().name();
    const auto d = e.dimension();
    if (d)
        doc["dim"] = *d;
    else
        doc["dim"] = nullptr;
    nlohmann::json monos = nlohmann::json::array();
    for (const auto& m : e.terms()) monos.push_back(mono_json(m));
    doc["monomials"] = monos;
    doc["string"] = to_string(e);
    return doc.dump();
}

std::string format_tensor(const TensorElement& t, Format mode) {
    if (mode == Format::Text) return to_string(t);
    nlohmann::json doc;
    doc["space"] = t.space().name();
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [u, v] : t.pairs())
        pairs.push_back({{"left", mono_json(u)}, {"right", mono_json(v)}});
    doc["pairs"] = pairs;
    doc["string"] = to_string(t);
    return doc.dump();
}

} // namespace loopcalc
