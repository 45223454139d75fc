#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

#include "core.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "ring.hpp"

namespace grkit {

// Group-ring element literals, matching the printed form:
//   6 a^2 - b + 1          juxtaposition multiplies
//   (1 - a)(1 + a) * bhat  "<label>hat" is the cyclic sum over <label>
//   a^-1 b                 negative powers need an invertible single term
// Grammar: expr = [-] term ((+|-) term)*; term = factor (['*'] factor)*;
// factor = base [^ [-] int]; base = int | ident | ( expr ).
// Identifiers are matched greedily against the group's generator labels and
// their "hat" forms, so "ab" reads as a*b when a and b are generators.

namespace detail {

struct ElemToken {
    enum Kind { number, ident, hat_ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind = end;
    long long num = 0;
    Elt elt = 0;  // generator element for ident / hat_ident
    std::size_t pos = 0;
};

inline std::vector<ElemToken> lex_element(const FiniteGroup& G, const std::string& s) {
    struct Label {
        std::string text;
        Elt elt;
        bool hat;
    };
    std::vector<Label> labels;
    for (const auto& [name, g] : G.generator_labels()) {
        labels.push_back({name + "hat", g, true});
        labels.push_back({name, g, false});
    }
    // longest match first
    std::sort(labels.begin(), labels.end(), [](const Label& a, const Label& b) {
        return a.text.size() > b.text.size();
    });

    std::vector<ElemToken> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        ElemToken t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j - i > 12) throw parse_error(i, "number too long");
            t.kind = ElemToken::number;
            t.num = std::stoll(s.substr(i, j - i));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const Label* best = nullptr;
            for (const auto& L : labels)
                if (s.compare(i, L.text.size(), L.text) == 0) {
                    best = &L;
                    break;
                }
            if (!best) {
                if (labels.empty())
                    throw parse_error(i, "group has no generator labels to name elements with");
                std::string all;
                for (const auto& [name, g] : G.generator_labels()) {
                    if (!all.empty()) all += ", ";
                    all += name;
                }
                throw parse_error(i, "unknown symbol (generators: " + all + ")");
            }
            t.kind = best->hat ? ElemToken::hat_ident : ElemToken::ident;
            t.elt = best->elt;
            i += best->text.size();
        } else {
            switch (c) {
                case '+': t.kind = ElemToken::plus; break;
                case '-': t.kind = ElemToken::minus; break;
                case '*': t.kind = ElemToken::star; break;
                case '^': t.kind = ElemToken::caret; break;
                case '(': t.kind = ElemToken::lparen; break;
                case ')': t.kind = ElemToken::rparen; break;
                default: throw parse_error(i, std::string("unexpected character '") + c + "'");
            }
            ++i;
        }
        out.push_back(t);
    }
    ElemToken fin;
    fin.kind = ElemToken::end;
    fin.pos = s.size();
    out.push_back(fin);
    return out;
}

template <Ring R>
class ElementParser {
   public:
    ElementParser(const FiniteGroup& G, const R& ring, const std::string& text)
        : G_(G), ring_(ring), toks_(lex_element(G, text)) {}

    GroupRingElement<R> parse() {
        auto v = expr();
        expect(ElemToken::end, "trailing input");
        return v;
    }

   private:
    const FiniteGroup& G_;
    R ring_;
    std::vector<ElemToken> toks_;
    std::size_t at_ = 0;

    const ElemToken& cur() const { return toks_[at_]; }
    bool accept(ElemToken::Kind k) {
        if (cur().kind != k) return false;
        ++at_;
        return true;
    }
    void expect(ElemToken::Kind k, const std::string& what) {
        if (!accept(k)) throw parse_error(cur().pos, "expected " + what);
    }

    GroupRingElement<R> expr() {
        bool negate = accept(ElemToken::minus);
        auto v = term();
        if (negate) v = neg(v);
        for (;;) {
            if (accept(ElemToken::plus))
                v = add(v, term());
            else if (accept(ElemToken::minus))
                v = sub(v, term());
            else
                return v;
        }
    }

    bool starts_factor() const {
        auto k = cur().kind;
        return k == ElemToken::number || k == ElemToken::ident || k == ElemToken::hat_ident ||
               k == ElemToken::lparen;
    }

    GroupRingElement<R> term() {
        auto v = factor();
        for (;;) {
            if (accept(ElemToken::star)) {
                v = mul(v, factor());
            } else if (starts_factor()) {
                v = mul(v, factor());
            } else {
                return v;
            }
        }
    }

    GroupRingElement<R> factor() {
        auto v = base();
        if (accept(ElemToken::caret)) {
            bool negexp = accept(ElemToken::minus);
            if (cur().kind != ElemToken::number) throw parse_error(cur().pos, "expected exponent");
            long long e = cur().num;
            ++at_;
            if (e > 1024) throw parse_error(cur().pos, "exponent exceeds 1024");
            if (negexp) v = invert_single_term(v);
            v = pow(v, static_cast<unsigned long long>(e));
        }
        return v;
    }

    GroupRingElement<R> base() {
        const ElemToken& t = cur();
        switch (t.kind) {
            case ElemToken::number:
                ++at_;
                return GroupRingElement<R>::monomial(G_, ring_, 0, ring_.from_int(t.num));
            case ElemToken::ident:
                ++at_;
                return GroupRingElement<R>::of_element(G_, ring_, t.elt);
            case ElemToken::hat_ident:
                ++at_;
                return hat(G_, ring_, t.elt);
            case ElemToken::lparen: {
                ++at_;
                auto v = expr();
                expect(ElemToken::rparen, "')'");
                return v;
            }
            default:
                throw parse_error(t.pos, "expected a number, generator, or '('");
        }
    }

    GroupRingElement<R> invert_single_term(const GroupRingElement<R>& v) {
        if (v.support_size() != 1)
            throw parse_error(cur().pos, "negative powers need a single-term base");
        Elt g = v.support()[0];
        auto c = v.coeff(g);
        typename R::value_type cinv;
        if constexpr (Field<R>) {
            cinv = ring_.inv(c);
        } else {
            if (c == ring_.one())
                cinv = c;
            else if (c == ring_.neg(ring_.one()))
                cinv = c;
            else
                throw parse_error(cur().pos, "coefficient is not invertible over " + ring_.name());
        }
        return GroupRingElement<R>::monomial(G_, ring_, G_.inverse(g), cinv);
    }
};

}  // namespace detail

template <Ring R>
GroupRingElement<R> parse_element(const FiniteGroup& G, const R& ring, const std::string& text) {
    return detail::ElementParser<R>(G, ring, text).parse();
}

}  // namespace grkit
