#include "asreg/regularity.hpp"

#include "asreg/errors.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace asreg {

bool Grevlex::operator()(const Exponent& a, const Exponent& b) const {
    const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
    if (da != db) return da < db;
    if (a[2] != b[2]) return a[2] > b[2];
    if (a[1] != b[1]) return a[1] > b[1];
    return a[0] < b[0];
}

CommPoly CommPoly::monomial(const Exponent& e, const Scalar& c) {
    CommPoly p;
    p.add(e, c);
    return p;
}

CommPoly CommPoly::from_form(const LinearForm& f) {
    CommPoly p;
    p.add({1, 0, 0}, f.c[0]);
    p.add({0, 1, 0}, f.c[1]);
    p.add({0, 0, 1}, f.c[2]);
    return p;
}

bool CommPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_)
        if (e[0] + e[1] + e[2] != d) return false;
    return true;
}

int CommPoly::degree() const {
    if (terms_.empty()) return -1;
    const Exponent& e = leading_exponent();
    return e[0] + e[1] + e[2];
}

Scalar CommPoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void CommPoly::add(const Exponent& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommPoly CommPoly::scaled(const Scalar& s) const {
    CommPoly out;
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

CommPoly CommPoly::shifted(const Exponent& m) const {
    CommPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e[0] + m[0], e[1] + m[1], e[2] + m[2]}, c);
    return out;
}

CommPoly CommPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
}

CommPoly operator+(const CommPoly& a, const CommPoly& b) {
    CommPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add(e, c);
    return out;
}

CommPoly operator-(const CommPoly& a, const CommPoly& b) { return a + b.scaled(Scalar(-1)); }

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

bool operator==(const CommPoly& a, const CommPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

Scalar CommPoly::evaluate(const std::array<Scalar, 3>& point) const {
    Scalar total = 0;
    for (const auto& [e, c] : terms_) total += c * point[0].pow(e[0]) * point[1].pow(e[1]) * point[2].pow(e[2]);
    return total;
}

std::string CommPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Scalar mag = c;
        mpq_class q;
        bool negative = false;
        if (c.rational_value(q) && q < 0) {
            negative = true;
            mag = Scalar(mpq_class(-q));
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "xyz"[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (!mag.is_one()) {
                std::string m = mag.str();
                if (mag.is_cyclo() && m.find_first_of("+-", 1) != std::string::npos) m = "(" + m + ")";
                out += m + "*";
            }
            out += mono;
        }
    }
    return out;
}

CommPoly commutative_image(const Tensor& t) {
    CommPoly p;
    for (const auto& [code, c] : t.terms()) {
        Exponent e{0, 0, 0};
        const Word w(code, t.degree());
        for (int i = 0; i < t.degree(); ++i) ++e[static_cast<int>(w.at(i))];
        p.add(e, c);
    }
    return p;
}

std::array<std::array<CommPoly, 3>, 3> minors_2x2(const LinearFormMatrix& m) {
    std::array<std::array<CommPoly, 3>, 3> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r[2], c[2];
            for (int k = 0, n = 0; k < 3; ++k)
                if (k != i) r[n++] = k;
            for (int k = 0, n = 0; k < 3; ++k)
                if (k != j) c[n++] = k;
            CommPoly det = CommPoly::from_form(m[r[0]][c[0]]) * CommPoly::from_form(m[r[1]][c[1]]) -
                           CommPoly::from_form(m[r[0]][c[1]]) * CommPoly::from_form(m[r[1]][c[0]]);
            out[i][j] = ((i + j) % 2) ? det.scaled(Scalar(-1)) : det;
        }
    return out;
}

namespace {

bool divides(const Exponent& a, const Exponent& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }

Exponent lcm(const Exponent& a, const Exponent& b) {
    return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

Exponent quotient(const Exponent& a, const Exponent& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool coprime(const Exponent& a, const Exponent& b) {
    for (int v = 0; v < 3; ++v)
        if (a[v] > 0 && b[v] > 0) return false;
    return true;
}

CommPoly s_polynomial(const CommPoly& f, const CommPoly& g) {
    const Exponent l = lcm(f.leading_exponent(), g.leading_exponent());
    return f.monic().shifted(quotient(l, f.leading_exponent())) - g.monic().shifted(quotient(l, g.leading_exponent()));
}

}  // namespace

CommPoly normal_form(const CommPoly& p, const std::vector<CommPoly>& basis) {
    CommPoly work = p, remainder;
    while (!work.is_zero()) {
        const Exponent lt = work.leading_exponent();
        const Scalar lc = work.leading_coeff();
        bool reduced = false;
        for (const CommPoly& g : basis) {
            if (g.is_zero() || !divides(g.leading_exponent(), lt)) continue;
            work = work - g.shifted(quotient(lt, g.leading_exponent())).scaled(lc / g.leading_coeff());
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add(lt, lc);
            work.add(lt, -lc);
        }
    }
    return remainder;
}

GroebnerBasis buchberger(const std::vector<CommPoly>& gens) {
    std::vector<CommPoly> g;
    for (const CommPoly& p : gens)
        if (!p.is_zero()) g.push_back(p.monic());
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        if (coprime(g[i].leading_exponent(), g[j].leading_exponent())) continue;
        CommPoly r = normal_form(s_polynomial(g[i], g[j]), g);
        if (r.is_zero()) continue;
        g.push_back(r.monic());
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    // Minimalize, then inter-reduce.
    std::vector<CommPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j || !divides(g[j].leading_exponent(), g[i].leading_exponent())) continue;
            // Equal leading terms: keep the earliest copy only.
            redundant = g[j].leading_exponent() != g[i].leading_exponent() || j < i;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    GroebnerBasis out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<CommPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        CommPoly head = CommPoly::monomial(minimal[i].leading_exponent(), minimal[i].leading_coeff());
        CommPoly tail = minimal[i] - head;
        out.generators.push_back((head + normal_form(tail, others)).monic());
    }
    std::sort(out.generators.begin(), out.generators.end(), [](const CommPoly& a, const CommPoly& b) {
        return Grevlex{}(a.leading_exponent(), b.leading_exponent());
    });
    return out;
}

namespace {

// For a homogeneous ideal the projective locus is empty iff the ideal is
// zero-dimensional at the origin, i.e. the leading terms contain a pure power
// of every variable.
bool has_pure_powers(const GroebnerBasis& gb) {
    bool pure[3] = {false, false, false};
    for (const CommPoly& p : gb.generators) {
        const Exponent& e = p.leading_exponent();
        for (int v = 0; v < 3; ++v)
            if (e[v] > 0 && e[(v + 1) % 3] == 0 && e[(v + 2) % 3] == 0) pure[v] = true;
    }
    return pure[0] && pure[1] && pure[2];
}

}  // namespace

bool projective_locus_empty(const std::vector<CommPoly>& gens) {
    for (const CommPoly& p : gens)
        if (!p.is_homogeneous()) throw NonHomogeneousInput("projective_locus_empty needs homogeneous generators");
    return has_pure_powers(buchberger(gens));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::regular: return "Regular";
        case Verdict::not_standard: return "NotStandard";
        case Verdict::non_empty_minor_locus: return "NonEmptyMinorLocus";
        case Verdict::degenerate_relations: return "DegenerateRelations";
    }
    return "?";
}

RegularityReport as_regular_check(const QuadraticAlgebra& a) {
    RegularityReport rep;
    rep.relation_dimension = a.relation_dimension();
    if (rep.relation_dimension != 3) {
        rep.verdict = Verdict::degenerate_relations;
        return rep;
    }
    const StandardResult st = is_standard(a);
    rep.standard = st.standard;
    if (!st.standard) {
        rep.verdict = Verdict::not_standard;
        return rep;
    }
    rep.standard_basis = st.basis;
    const auto minors = minors_2x2(relation_matrix(a, st.basis));
    for (const auto& row : minors)
        for (const CommPoly& p : row) rep.minors.push_back(p);
    rep.groebner = buchberger(rep.minors);
    rep.locus_empty = has_pure_powers(rep.groebner);
    rep.verdict = rep.locus_empty ? Verdict::regular : Verdict::non_empty_minor_locus;
    return rep;
}

}  // namespace asreg
