#include "asreg/quadratic.hpp"

#include "asreg/errors.hpp"

namespace asreg {

namespace {

Matrix rows_of(const std::vector<Tensor>& ts, int degree) {
    Matrix m(ts.size(), pow3(degree));
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i].degree() != degree) throw DegreeMismatch("relation of degree " + std::to_string(ts[i].degree()));
        for (const auto& [code, c] : ts[i].terms()) m.at(i, code) = c;
    }
    return m;
}

Tensor row_tensor(const Matrix& m, std::size_t row, int degree) {
    Tensor t(degree);
    for (std::size_t j = 0; j < m.cols(); ++j) t.add_code(static_cast<std::uint32_t>(j), m.at(row, j));
    return t;
}

// Iterates over coefficient vectors c in {-2..2}^n (n capped at 5), calling
// visit until it returns true.
template <class Visit>
bool search_small_combinations(std::size_t n, Visit visit) {
    const std::size_t limit = n < 5 ? n : 5;
    std::vector<int> coef(limit, -2);
    for (;;) {
        if (visit(coef)) return true;
        std::size_t pos = 0;
        while (pos < limit && coef[pos] == 2) coef[pos++] = -2;
        if (pos == limit) return false;
        ++coef[pos];
    }
}

}  // namespace

RelationSpace::RelationSpace(const std::vector<Tensor>& spanning, int degree) : degree_(degree) {
    const RrefResult rr = rref(rows_of(spanning, degree));
    canonical_ = Matrix(rr.rank, pow3(degree));
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < canonical_.cols(); ++j) canonical_.at(i, j) = rr.matrix.at(i, j);
}

std::vector<Tensor> RelationSpace::basis() const {
    std::vector<Tensor> out;
    for (std::size_t i = 0; i < canonical_.rows(); ++i) out.push_back(row_tensor(canonical_, i, degree_));
    return out;
}

bool RelationSpace::contains(const Tensor& t) const {
    std::vector<Tensor> all = basis();
    all.push_back(t);
    return RelationSpace(all, degree_).dimension() == dimension();
}

QuadraticAlgebra::QuadraticAlgebra(std::vector<Tensor> relations)
    : relations_(std::move(relations)), space_(relations_, 2) {}

FieldSpec QuadraticAlgebra::field() const {
    FieldSpec f = FieldSpec::rationals();
    for (const Tensor& t : relations_) f = join(f, t.field());
    return f;
}

std::string LinearForm::str() const {
    Tensor t(1);
    for (int i = 0; i < 3; ++i) t.add_code(static_cast<std::uint32_t>(i), c[i]);
    return t.str();
}

QuadraticAlgebra derivation_quotient(const Tensor& w) {
    if (w.degree() != 3) throw DegreeMismatch("derivation_quotient needs a potential");
    std::vector<Tensor> rels;
    for (int v = 0; v < 3; ++v) rels.push_back(partial(w, static_cast<Var>(v)));
    QuadraticAlgebra a(std::move(rels));
    if (a.relation_dimension() != 3) {
        throw DegeneratePotential("partial derivatives span a " + std::to_string(a.relation_dimension()) + "-dimensional space");
    }
    return a;
}

LinearFormMatrix relation_matrix(const QuadraticAlgebra& a, const std::vector<Tensor>& basis) {
    if (basis.size() != 3 || RelationSpace(basis) != a.space() || a.relation_dimension() != 3) {
        throw NotABasis("relation_matrix needs an ordered basis of the 3-dimensional relation space");
    }
    LinearFormMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) m[i][j].c[k] = basis[i].coeff(Word::of({static_cast<Var>(k), static_cast<Var>(j)}));
    return m;
}

std::vector<Tensor> row_vector_times(const LinearFormMatrix& m) {
    std::vector<Tensor> out;
    for (int j = 0; j < 3; ++j) {
        Tensor g(2);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) g.add(Word::of({static_cast<Var>(i), static_cast<Var>(k)}), m[i][j].c[k]);
        out.push_back(std::move(g));
    }
    return out;
}

StandardResult is_standard(const QuadraticAlgebra& a, const std::vector<Tensor>& basis) {
    const LinearFormMatrix m = relation_matrix(a, basis);
    const std::vector<Tensor> direct = row_vector_times(m);
    if (RelationSpace(direct) == a.space()) return {true, basis};

    // Look for P with the entries of x^t (P M) inside R. Unknown P(i, k) is
    // column 3i + k; each annihilator phi of R gives one equation per column j.
    const FieldSpec f = a.field();
    std::vector<Matrix> annihilators = kernel(a.space().canonical());
    Matrix eq(annihilators.size() * 3, 9);
    for (std::size_t t = 0; t < annihilators.size(); ++t)
        for (int j = 0; j < 3; ++j) {
            const std::size_t row = 3 * t + static_cast<std::size_t>(j);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) {
                    Scalar s = Scalar::zero(f);
                    for (int l = 0; l < 3; ++l) s += annihilators[t].at(static_cast<std::size_t>(3 * i + l), 0) * m[k][j].c[l];
                    eq.at(row, static_cast<std::size_t>(3 * i + k)) = s;
                }
        }
    const std::vector<Matrix> ker = kernel(eq);
    StandardResult result;
    if (ker.empty()) return result;
    search_small_combinations(ker.size(), [&](const std::vector<int>& coef) {
        Matrix col(9, 1);
        for (std::size_t r = 0; r < 9; ++r) col.at(r, 0) = Scalar::zero(f);
        for (std::size_t k = 0; k < coef.size(); ++k)
            if (coef[k] != 0) col = col + ker[k].scaled(Scalar(coef[k]));
        Matrix p(3, 3);
        for (std::size_t r = 0; r < 9; ++r) p.at(r / 3, r % 3) = col.at(r, 0);
        if (!p.invertible()) return false;
        std::vector<Tensor> changed;
        for (int i = 0; i < 3; ++i) {
            Tensor t(2);
            for (int k = 0; k < 3; ++k) t = t + basis[k].scaled(p.at(i, k));
            changed.push_back(std::move(t));
        }
        if (RelationSpace(row_vector_times(relation_matrix(a, changed))) != a.space()) return false;
        result = {true, changed};
        return true;
    });
    return result;
}

StandardResult is_standard(const QuadraticAlgebra& a) {
    if (a.relation_dimension() != 3) return {};
    if (a.relations().size() == 3 && RelationSpace(a.relations()) == a.space()) return is_standard(a, a.relations());
    return is_standard(a, a.space().basis());
}

QuadraticAlgebra zhang_twist(const QuadraticAlgebra& a, const LinearMap& theta) {
    if (!theta.invertible()) throw SingularMap("zhang_twist needs an invertible map");
    const LinearMap inv = theta.inverse();
    std::vector<Tensor> rels;
    for (const Tensor& r : a.relations()) rels.push_back(gl_apply(r, {Matrix::identity(3), inv}));
    return QuadraticAlgebra(std::move(rels));
}

SparseEchelon ideal_component(const RelationSpace& r, int n) {
    SparseEchelon e;
    if (n < 2) return e;
    const std::vector<Tensor> basis = r.basis();
    for (int i = 0; i + 2 <= n; ++i) {
        const int j = n - 2 - i;
        const std::uint32_t pre = pow3(i), post = pow3(j);
        for (const Tensor& rel : basis)
            for (std::uint32_t p = 0; p < pre; ++p)
                for (std::uint32_t s = 0; s < post; ++s) {
                    SparseVector v;
                    for (const auto& [code, c] : rel.terms()) v.emplace((p * 9 + code) * post + s, c);
                    e.insert(std::move(v));
                }
    }
    return e;
}

std::vector<std::size_t> hilbert_dims(const QuadraticAlgebra& a, int max_degree) {
    if (max_degree > 6) throw DegreeTooLarge("hilbert_dims is capped at degree 6, asked for " + std::to_string(max_degree));
    std::vector<std::size_t> dims;
    for (int n = 0; n <= max_degree; ++n) dims.push_back(pow3(n) - ideal_component(a.space(), n).rank());
    return dims;
}

FrobeniusData quadratic_dual(const QuadraticAlgebra& a) {
    if (a.relation_dimension() != 3) throw NotFrobeniusShape("relation space must be 3-dimensional");
    FrobeniusData d;
    std::vector<Tensor> perp;
    for (const Matrix& k : kernel(a.space().canonical())) {
        Tensor t(2);
        for (std::uint32_t v = 0; v < 9; ++v) t.add_code(v, k.at(v, 0));
        perp.push_back(std::move(t));
    }
    d.perp = RelationSpace(perp);
    for (int n = 0; n <= 4; ++n) {
        d.ideal.push_back(ideal_component(d.perp, n));
        std::vector<std::uint32_t> normal;
        for (std::uint32_t w = 0; w < pow3(n); ++w)
            if (!d.ideal.back().is_pivot(w)) normal.push_back(w);
        d.dims.push_back(normal.size());
        d.normal_words.push_back(std::move(normal));
    }
    const std::vector<std::size_t> expected{1, 3, 3, 1, 0};
    if (d.dims != expected) {
        std::string got;
        for (std::size_t x : d.dims) got += (got.empty() ? "" : ",") + std::to_string(x);
        throw NotFrobeniusShape("dual dimensions (" + got + "), expected (1,3,3,1,0)");
    }
    return d;
}

NakayamaResult nakayama(const QuadraticAlgebra& a) {
    const FrobeniusData d = quadratic_dual(a);
    const FieldSpec f = a.field();
    const std::uint32_t top = d.normal_words[3].front();
    // Functional on degree 3: coordinate of the single standard monomial.
    auto functional = [&](std::uint32_t word) {
        SparseVector v;
        v.emplace(word, Scalar::one(f));
        const SparseVector r = d.ideal[3].reduce(std::move(v));
        auto it = r.find(top);
        return it == r.end() ? Scalar::zero(f) : it->second;
    };
    const std::vector<std::uint32_t>& mid = d.normal_words[2];
    Matrix pairing(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::uint32_t k = 0; k < 3; ++k) pairing.at(r, k) = functional(mid[r] * 3 + k);
    if (!pairing.invertible()) throw DegeneratePairing("pairing A!_2 x A!_1 -> A!_3 is singular");
    // Row u of `n` solves lambda(u v) = sum_k n(u, k) lambda(v x_k).
    Matrix n(3, 3);
    for (std::uint32_t u = 0; u < 3; ++u) {
        Matrix rhs(3, 1);
        for (std::size_t r = 0; r < 3; ++r) rhs.at(r, 0) = functional(u * 9 + mid[r]);
        const Solution s = solve(pairing, rhs);
        const Matrix& col = std::get<Unique>(s).solution;
        for (std::size_t k = 0; k < 3; ++k) n.at(u, k) = col.at(k, 0);
    }
    // n acts on the dual generators; the induced map on V is its transpose.
    return {n.transpose().in(join(f, n.field()))};
}

bool relations_equal_up_to(const QuadraticAlgebra& a, const QuadraticAlgebra& b, const LinearMap& g) {
    if (!g.invertible()) throw SingularMap("relations_equal_up_to needs an invertible map");
    std::vector<Tensor> moved;
    for (const Tensor& r : a.relations()) moved.push_back(gl_apply(r, g));
    return RelationSpace(moved) == b.space();
}

}  // namespace asreg
