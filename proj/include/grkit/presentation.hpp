#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace grkit {

// A finite presentation. Relator letters are encoded as signed 1-based
// generator indices: +k means generator k-1, -k its inverse.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;
};

namespace detail {

class PresentationParser {
public:
    explicit PresentationParser(std::string_view text) : s_(text) {}

    Presentation parse() {
        Presentation p;
        expect_word("gens");
        p.generators.push_back(ident());
        while (eat(',')) p.generators.push_back(ident());
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            for (std::size_t j = i + 1; j < p.generators.size(); ++j)
                if (p.generators[i] == p.generators[j])
                    fail(0, "duplicate generator '" + p.generators[i] + "'");
        if (!eat(';')) fail(pos_, "expected ';' after generator list");
        expect_word("rels");
        gens_ = &p.generators;
        p.relators.push_back(relator());
        while (eat(',')) p.relators.push_back(relator());
        skip_ws();
        if (pos_ != s_.size()) fail(pos_, "trailing input after relator list");
        return p;
    }

private:
    // word ('=' word)?  normalized to lhs * rhs^-1; '1' denotes the empty word
    std::vector<int> relator() {
        std::size_t at = pos_;
        auto lhs = word();
        std::vector<int> rhs;
        if (eat('=')) rhs = word();
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) lhs.push_back(-*it);
        if (lhs.empty()) fail(at, "relator reduces to the empty word");
        return lhs;
    }

    std::vector<int> word() {
        std::vector<int> letters;
        skip_ws();
        if (peek() == '1') {
            ++pos_;
            return letters;
        }
        letters = factor();
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
                auto f = factor();
                letters.insert(letters.end(), f.begin(), f.end());
            } else {
                break;
            }
        }
        return letters;
    }

    std::vector<int> factor() {
        std::size_t at = pos_;
        std::string name = ident();
        int idx = -1;
        for (std::size_t i = 0; i < gens_->size(); ++i)
            if ((*gens_)[i] == name) idx = static_cast<int>(i);
        if (idx < 0) fail(at, "undeclared generator '" + name + "'");
        long long exp = 1;
        if (eat('^')) exp = integer();
        if (exp == 0) fail(at, "zero exponent");
        if (exp > 1024 || exp < -1024) fail(at, "exponent magnitude is capped at 1024");
        int letter = exp > 0 ? idx + 1 : -(idx + 1);
        std::vector<int> out(static_cast<std::size_t>(exp > 0 ? exp : -exp), letter);
        return out;
    }

    std::string ident() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail(at, "expected an identifier");
        std::string out;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            out += s_[pos_++];
        }
        return out;
    }

    long long integer() {
        skip_ws();
        std::size_t at = pos_;
        bool neg = eat('-');
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(at, "expected an integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000) fail(at, "integer too large");
        }
        return neg ? -v : v;
    }

    void expect_word(const std::string& w) {
        skip_ws();
        std::size_t at = pos_;
        if (s_.substr(pos_, w.size()) != w) fail(at, "expected '" + w + "'");
        pos_ += w.size();
        if (pos_ < s_.size() &&
            (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            fail(at, "expected '" + w + "'");
    }

    char peek() const { return s_[pos_]; }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(std::size_t at, const std::string& msg) { throw parse_error(at, msg); }

    std::string_view s_;
    std::size_t pos_ = 0;
    const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace detail

// Grammar:
//   presentation := 'gens' label (',' label)* ';' 'rels' relator (',' relator)*
//   relator      := word ('=' word)?         (normalized to lhs * rhs^-1)
//   word         := '1' | factor+            (juxtaposition is concatenation)
//   factor       := label ('^' int)?         (int nonzero, negatives allowed)
inline Presentation parse_presentation(std::string_view text) {
    return detail::PresentationParser(text).parse();
}

inline std::string to_string(const Presentation& p) {
    std::string s = "gens ";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i) s += ",";
        s += p.generators[i];
    }
    s += "; rels ";
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        if (r) s += ", ";
        const auto& w = p.relators[r];
        std::size_t i = 0;
        while (i < w.size()) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            long long exp = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
            if (i) s += " ";
            s += p.generators[std::abs(w[i]) - 1];
            if (exp != 1) s += "^" + std::to_string(exp);
            i = j;
        }
    }
    return s;
}

}  // namespace grkit
