#include "asreg/parse.hpp"

#include "asreg/errors.hpp"

#include <cctype>

namespace asreg {

namespace {

Scalar primitive_cube_root_of_unity(const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::cyclotomic3 || f.kind == FieldSpec::Kind::rationals) return Scalar::zeta3();
    const std::uint64_t p = f.modulus;
    if (p % 3 != 1) throw InvalidField("zeta needs a modulus congruent to 1 mod 3, got " + std::to_string(p));
    for (std::uint64_t g = 2;; ++g) {
        const std::uint64_t r = modp::pow(g, (p - 1) / 3, p);
        if (r != 1) return Scalar::residue(r, p);
    }
}

Scalar cube_root(const Scalar& s) {
    mpq_class q;
    if (s.rational_value(q)) {
        mpq_class root;
        if (!rational_cube_root(q, root)) throw CubeRootUnavailable(q.get_str() + " has no rational cube root");
        return Scalar(root).in(s.field());
    }
    if (s.is_residue()) {
        const Residue& r = s.as_residue();
        if (r.value == 0) return s;
        if (r.modulus % 3 == 2) return Scalar::residue(modp::pow(r.value, (2 * r.modulus - 1) / 3, r.modulus), r.modulus);
        throw CubeRootUnavailable("cube roots mod " + std::to_string(r.modulus) + " are not unique");
    }
    throw CubeRootUnavailable("cube root of " + s.str() + " is not supported");
}

class Parser {
public:
    Parser(const std::string& text, const Bindings& bindings, const FieldSpec& field)
        : text_(text), bindings_(bindings), field_(field) {}

    Scalar scalar_expression() {
        Scalar v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

    Tensor potential() {
        skip();
        if (pos_ == text_.size()) fail("empty potential");
        Tensor total;
        bool first = true;
        while (true) {
            skip();
            if (pos_ == text_.size()) break;
            int sign = 1;
            if (!first) {
                const char op = text_[pos_];
                if (op != '+' && op != '-') fail("expected + or - between terms");
                ++pos_;
                if (op == '-') sign = -1;
            }
            skip();
            while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                if (text_[pos_] == '-') sign = -sign;
                ++pos_;
                skip();
            }
            const std::size_t term_start = pos_;
            auto [coef, word] = term();
            if (word.empty()) fail_at(term_start, "term has no letters");
            const Tensor t = monomial(Word::parse(word), coef * Scalar(sign));
            if (first) {
                total = Tensor(t.degree());
            } else if (t.degree() != total.degree()) {
                throw MixedDegree("term at position " + std::to_string(term_start) + " has degree " +
                                  std::to_string(t.degree()) + ", expected " + std::to_string(total.degree()));
            }
            total = total + t;
            first = false;
        }
        Tensor out(total.degree());
        for (const auto& [code, c] : total.terms()) out.add_code(code, c.in(field_));
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        throw SyntaxError(msg + " at position " + std::to_string(at));
    }

    void skip() {
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else if (ch == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    bool peek(char ch) {
        skip();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    static bool is_letter_name(const std::string& s) { return s == "x" || s == "y" || s == "z"; }

    std::string identifier_at(std::size_t at) const {
        std::size_t end = at;
        while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
        return text_.substr(at, end - at);
    }

    // One product term of a potential: returns its coefficient and word.
    std::pair<Scalar, std::string> term() {
        Scalar coef = 1;
        std::string word;
        bool divide = false;
        while (true) {
            skip();
            if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) &&
                is_letter_name(identifier_at(pos_))) {
                if (divide) fail("cannot divide by a letter");
                const char ch = text_[pos_++];
                int power = 1;
                if (peek('^')) {
                    ++pos_;
                    power = integer();
                    if (power < 1) fail("letter powers must be positive");
                }
                word.append(static_cast<std::size_t>(power), ch);
            } else {
                const Scalar f = power();
                coef = divide ? coef / f : coef * f;
            }
            if (peek('*')) {
                ++pos_;
                divide = false;
            } else if (peek('/')) {
                ++pos_;
                divide = true;
            } else {
                break;
            }
        }
        return {coef, word};
    }

    Scalar expr() {
        Scalar v = product();
        while (true) {
            if (peek('+')) {
                ++pos_;
                v = v + product();
            } else if (peek('-')) {
                ++pos_;
                v = v - product();
            } else {
                return v;
            }
        }
    }

    Scalar product() {
        Scalar v = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                v = v * unary();
            } else if (peek('/')) {
                ++pos_;
                v = v / unary();
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (peek('^')) {
            ++pos_;
            base = base.pow(integer());
        }
        return base;
    }

    int integer() {
        skip();
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 6) fail_at(start, "exponent too large");
        const int v = std::stoi(text_.substr(start, pos_ - start));
        return negative ? -v : v;
    }

    Scalar atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Scalar v = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Scalar(mpz_class(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            const std::string name = identifier_at(pos_);
            pos_ += name.size();
            if (name == "cbrt") {
                if (!peek('(')) fail("expected '(' after cbrt");
                ++pos_;
                Scalar v = expr();
                if (!peek(')')) fail("expected ')'");
                ++pos_;
                return cube_root(v.in(join(field_, v.field())));
            }
            if (is_letter_name(name)) fail_at(start, "letter '" + name + "' inside a coefficient");
            auto it = bindings_.find(name);
            if (it != bindings_.end()) return it->second;
            if (name == "zeta") return primitive_cube_root_of_unity(field_);
            throw UnboundParameter("'" + name + "' at position " + std::to_string(start));
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    const std::string& text_;
    const Bindings& bindings_;
    FieldSpec field_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar evaluate(const std::string& text, const Bindings& bindings, const FieldSpec& field) {
    Parser p(text, bindings, field);
    return p.scalar_expression().in(field);
}

Tensor parse_potential(const std::string& text, const Bindings& bindings, const FieldSpec& field) {
    Parser p(text, bindings, field);
    return p.potential();
}

Matrix parse_matrix(const std::string& text, const Bindings& bindings, const FieldSpec& field) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 9) throw SyntaxError("matrix needs 9 comma-separated entries, got " + std::to_string(parts.size()));
    Matrix m(3, 3);
    for (std::size_t k = 0; k < 9; ++k) m.at(k / 3, k % 3) = evaluate(parts[k], bindings, field);
    return m;
}

Bindings parse_bindings(const std::vector<std::string>& pairs, const FieldSpec& field) {
    Bindings b;
    for (const std::string& pair : pairs) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos || eq == 0) throw SyntaxError("binding '" + pair + "' must look like name=value");
        b[pair.substr(0, eq)] = evaluate(pair.substr(eq + 1), b, field);
    }
    return b;
}

}  // namespace asreg
