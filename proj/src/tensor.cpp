#include "asreg/tensor.hpp"

#include "asreg/errors.hpp"

#include <functional>

namespace asreg {

char letter(Var v) { return "xyz"[static_cast<int>(v)]; }

std::uint32_t pow3(int n) {
    std::uint32_t r = 1;
    while (n-- > 0) r *= 3;
    return r;
}

Word Word::parse(const std::string& letters) {
    std::uint32_t code = 0;
    for (char ch : letters) {
        int d;
        switch (ch) {
            case 'x': d = 0; break;
            case 'y': d = 1; break;
            case 'z': d = 2; break;
            default: throw SyntaxError(std::string("bad letter '") + ch + "' in word");
        }
        code = code * 3 + static_cast<std::uint32_t>(d);
    }
    return Word(code, static_cast<int>(letters.size()));
}

Word Word::of(std::initializer_list<Var> letters) {
    std::uint32_t code = 0;
    for (Var v : letters) code = code * 3 + static_cast<std::uint32_t>(v);
    return Word(code, static_cast<int>(letters.size()));
}

Var Word::at(int i) const {
    return static_cast<Var>((code_ / pow3(length_ - 1 - i)) % 3);
}

Word Word::concat(const Word& tail) const {
    return Word(code_ * pow3(tail.length_) + tail.code_, length_ + tail.length_);
}

std::string Word::str() const {
    std::string s;
    for (int i = 0; i < length_; ++i) s += letter(at(i));
    return s;
}

FieldSpec Tensor::field() const {
    FieldSpec f = FieldSpec::rationals();
    for (const auto& [code, c] : terms_)
        if (!c.is_rational()) f = join(f, c.field());
    return f;
}

Scalar Tensor::coeff(const Word& w) const {
    if (w.length() != degree_) throw DegreeMismatch("word length " + std::to_string(w.length()) + " in degree " + std::to_string(degree_) + " tensor");
    auto it = terms_.find(w.code());
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Tensor::add(const Word& w, const Scalar& c) {
    if (w.length() != degree_) throw DegreeMismatch("word length " + std::to_string(w.length()) + " in degree " + std::to_string(degree_) + " tensor");
    add_code(w.code(), c);
}

void Tensor::add_code(std::uint32_t code, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(code, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor Tensor::operator-() const { return scaled(Scalar(-1)); }

Tensor Tensor::scaled(const Scalar& s) const {
    Tensor out(degree_);
    if (s.is_zero()) return out;
    for (const auto& [code, c] : terms_) out.terms_.emplace(code, c * s);
    return out;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    if (a.degree_ != b.degree_) throw DegreeMismatch("sum of degree " + std::to_string(a.degree_) + " and " + std::to_string(b.degree_));
    Tensor out = a;
    for (const auto& [code, c] : b.terms_) out.add_code(code, c);
    return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + (-b); }

bool operator==(const Tensor& a, const Tensor& b) {
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

std::vector<Scalar> Tensor::coordinates() const {
    std::vector<Scalar> out(pow3(degree_));
    for (const auto& [code, c] : terms_) out[code] = c;
    return out;
}

Tensor Tensor::from_coordinates(int degree, const std::vector<Scalar>& coords) {
    if (coords.size() != pow3(degree)) throw DegreeMismatch("coordinate vector has wrong length");
    Tensor t(degree);
    for (std::uint32_t i = 0; i < coords.size(); ++i) t.add_code(i, coords[i]);
    return t;
}

Tensor Tensor::normalized() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.begin()->second.inverse());
}

namespace {

std::string coefficient_text(const Scalar& c) {
    std::string s = c.str();
    if (c.is_cyclo() && s.find_first_of("+-", 1) != std::string::npos) return "(" + s + ")";
    return s;
}

}  // namespace

std::string Tensor::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [code, c] : terms_) {
        Scalar mag = c;
        bool negative = false;
        mpq_class q;
        if (c.rational_value(q) && q < 0) {
            negative = true;
            mag = Scalar(mpq_class(-q));
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!mag.is_one()) out += coefficient_text(mag) + "*";
        const Word w(code, degree_);
        for (int i = 0; i < degree_; ++i) {
            if (i) out += "*";
            out += letter(w.at(i));
        }
    }
    return out;
}

Tensor monomial(const Word& w, const Scalar& c) {
    Tensor t(w.length());
    t.add(w, c);
    return t;
}

Tensor left_multiply(Var v, const Tensor& t) {
    Tensor out(t.degree() + 1);
    const std::uint32_t offset = static_cast<std::uint32_t>(v) * pow3(t.degree());
    for (const auto& [code, c] : t.terms()) out.add_code(offset + code, c);
    return out;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
    Tensor out(a.degree() + b.degree());
    const std::uint32_t shift = pow3(b.degree());
    for (const auto& [ca, sa] : a.terms())
        for (const auto& [cb, sb] : b.terms()) out.add_code(ca * shift + cb, sa * sb);
    return out;
}

Tensor cyclic(const Tensor& w) {
    if (w.degree() != 3) throw DegreeMismatch("cyclic needs a degree 3 tensor");
    Tensor out(3);
    for (const auto& [code, c] : w.terms()) {
        const std::uint32_t last = code % 3;
        out.add_code(last * 9 + code / 3, c);
    }
    return out;
}

Tensor partial(const Tensor& w, Var v) {
    if (w.degree() < 2) throw DegreeMismatch("partial needs degree at least 2");
    const std::uint32_t block = pow3(w.degree() - 1);
    const std::uint32_t lead = static_cast<std::uint32_t>(v);
    Tensor out(w.degree() - 1);
    for (const auto& [code, c] : w.terms())
        if (code / block == lead) out.add_code(code % block, c);
    return out;
}

Tensor gl_apply(const Tensor& w, const std::vector<LinearMap>& maps) {
    if (static_cast<int>(maps.size()) != w.degree()) throw DegreeMismatch("one map per tensor slot required");
    for (const LinearMap& m : maps)
        if (m.rows() != 3 || m.cols() != 3) throw ShapeMismatch("slot maps must be 3x3");
    const int d = w.degree();
    Tensor out(d);
    for (const auto& [code, c] : w.terms()) {
        const Word word(code, d);
        // Expand slot by slot; each slot letter i maps to row i of its matrix.
        std::function<void(int, std::uint32_t, const Scalar&)> expand = [&](int pos, std::uint32_t acc, const Scalar& coef) {
            if (pos == d) {
                out.add_code(acc, coef);
                return;
            }
            const int i = static_cast<int>(word.at(pos));
            for (int j = 0; j < 3; ++j) {
                const Scalar& e = maps[pos].at(i, j);
                if (e.is_zero()) continue;
                expand(pos + 1, acc * 3 + static_cast<std::uint32_t>(j), coef * e);
            }
        };
        expand(0, 0, c);
    }
    return out;
}

Tensor gl_apply(const Tensor& w, const LinearMap& map) {
    return gl_apply(w, std::vector<LinearMap>(static_cast<std::size_t>(w.degree()), map));
}

Tensor ms_twist(const Tensor& w, const LinearMap& theta) {
    if (w.degree() != 3) throw DegreeMismatch("ms_twist needs a degree 3 tensor");
    return gl_apply(w, {theta * theta, theta, Matrix::identity(3)});
}

bool is_superpotential(const Tensor& w) { return cyclic(w) == w; }

bool is_witness(const Tensor& w, const LinearMap& theta) {
    return gl_apply(cyclic(w), {theta, Matrix::identity(3), Matrix::identity(3)}) == w;
}

WitnessResult twisted_witness(const Tensor& w) {
    if (w.degree() != 3) throw DegreeMismatch("twisted_witness needs a degree 3 tensor");
    const Tensor phi = cyclic(w);
    const FieldSpec f = w.field();
    std::vector<std::vector<Scalar>> u(3), wi(3);
    for (int j = 0; j < 3; ++j) {
        u[j] = partial(phi, static_cast<Var>(j)).coordinates();
        wi[j] = partial(w, static_cast<Var>(j)).coordinates();
    }
    // Unknown theta'(j, i) sits at column 3j + i. Row (i, v) reads
    // sum_j theta'(j, i) u_j[v] = w_i[v].
    Matrix a(27, 9), rhs(27, 1);
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < 9; ++v) {
            const int row = 9 * i + v;
            for (int j = 0; j < 3; ++j) a.at(row, 3 * j + i) = u[j][v];
            rhs.at(row, 0) = wi[i][v];
        }
    auto to_map = [&](const Matrix& col) {
        LinearMap m(3, 3);
        for (int k = 0; k < 9; ++k) m.at(k / 3, k % 3) = col.at(k, 0);
        return m.in(join(f, m.field()));
    };

    WitnessResult result;
    const Solution sol = solve(a, rhs);
    if (std::holds_alternative<Inconsistent>(sol)) return result;
    if (const auto* uq = std::get_if<Unique>(&sol)) {
        LinearMap m = to_map(uq->solution);
        if (m.invertible() && is_witness(w, m)) {
            result.status = WitnessResult::Status::found;
            result.theta = m;
        }
        return result;
    }
    const auto& under = std::get<Underdetermined>(sol);
    const std::size_t dim = under.kernel.size();
    result.solution_dimension = dim;
    auto accept = [&](const Matrix& col) {
        LinearMap m = to_map(col);
        if (m.invertible() && is_witness(w, m)) {
            result.status = WitnessResult::Status::found;
            result.theta = m;
            return true;
        }
        return false;
    };
    if (accept(under.particular)) return result;
    for (const Matrix& k : under.kernel) {
        if (accept(under.particular + k) || accept(under.particular - k)) return result;
    }
    // Small integer combinations of the kernel basis, coefficients in -2..2.
    const std::size_t limit = dim <= 5 ? dim : 5;
    std::vector<int> coef(limit, -2);
    for (;;) {
        Matrix col = under.particular;
        for (std::size_t k = 0; k < limit; ++k)
            if (coef[k] != 0) col = col + under.kernel[k].scaled(Scalar(coef[k]));
        if (accept(col)) return result;
        std::size_t pos = 0;
        while (pos < limit && coef[pos] == 2) coef[pos++] = -2;
        if (pos == limit) break;
        ++coef[pos];
    }
    result.status = WitnessResult::Status::undetermined_invertibility;
    return result;
}

std::optional<Scalar> proportional(const Tensor& a, const Tensor& b) {
    if (a.degree() != b.degree() || b.is_zero()) return std::nullopt;
    const auto& [code, bc] = *b.terms().begin();
    const Scalar c = a.coeff(Word(code, a.degree())) / bc;
    if (a == b.scaled(c)) return c;
    return std::nullopt;
}

std::optional<Scalar> aut_scalar(const Tensor& w, const LinearMap& theta) {
    if (w.is_zero()) throw ZeroPotential("aut_scalar of the zero potential");
    if (!theta.invertible()) throw SingularMap("aut_scalar needs an invertible map");
    return proportional(gl_apply(w, theta), w);
}

LinearMap swap_map(Var a, Var b) {
    LinearMap m = Matrix::identity(3);
    const int i = static_cast<int>(a), j = static_cast<int>(b);
    m.at(i, i) = 0;
    m.at(j, j) = 0;
    m.at(i, j) = 1;
    m.at(j, i) = 1;
    return m;
}

}  // namespace asreg
