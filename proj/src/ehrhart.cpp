#include "hstar/ehrhart.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hstar/error.hpp"
#include "hstar/lattice.hpp"

namespace hstar {

HStarVector::HStarVector(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("h*-vector must have at least one entry");
    if (coeffs_[0] != 1)
        throw NegativeCoefficient("h*_0 must equal 1, got " + coeffs_[0].str());
    for (const Int& c : coeffs_)
        if (c < 0)
            throw NegativeCoefficient("negative h*-coefficient " + c.str());
}

int HStarVector::degree() const {
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[i] != 0) return i;
    return 0;
}

Int HStarVector::volume() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

Int HStarVector::at_or_zero(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

bool HStarVector::same_polynomial(const HStarVector& other) const {
    std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (at_or_zero(i) != other.at_or_zero(i)) return false;
    return true;
}

std::string HStarVector::to_string() const {
    std::ostringstream out;
    out << coeffs_[0].str();
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out << " + " << coeffs_[i].str() << " t";
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

HStarVector hstar_interp(const LatticePolytope& p) {
    int d = p.dim();
    std::vector<Int> cnt(d + 1);
    for (int k = 0; k <= d; ++k) cnt[k] = count_points(p, k);
    std::vector<Int> h(d + 1);
    for (int j = 0; j <= d; ++j) {
        Int s = 0;
        for (int i = 0; i <= j; ++i) {
            Int term = binomial(d + 1, i) * cnt[j - i];
            if (i % 2 == 0) s += term; else s -= term;
        }
        h[j] = s;
    }
    return HStarVector(std::move(h));
}

bool LambdaGroup::contains(const RatVec& r) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), r);
    return it != elements.end() && *it == r;
}

int LambdaGroup::height_of(const RatVec& r) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), r);
    if (it == elements.end() || *it != r)
        throw PointNotInLattice("tuple is not a group element");
    return heights[static_cast<std::size_t>(it - elements.begin())];
}

RatVec LambdaGroup::add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size())
        throw DimensionMismatch("group elements of different length");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = frac_part(a[i] + b[i]);
    return r;
}

LambdaGroup lambda_group(const LatticePolytope& p) {
    if (!is_simplex(p))
        throw NotSimplex("group engine requires a simplex");
    int d = p.dim();
    int n = d + 1;

    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = p.vertices()[i][j];
        m(i, d) = 1;
    }
    SnfResult s = snf(m);

    std::vector<Int> diag(n);
    for (int i = 0; i < n; ++i) {
        diag[i] = s.d(i, i);
        if (diag[i] <= 0)
            throw NotFullDimensional("degenerate vertex matrix");
    }

    LambdaGroup g;
    g.tuple_len = n;
    for (int i = 0; i < n; ++i)
        if (diag[i] > 1) g.invariant_factors.push_back(diag[i]);

    // Cosets of the row lattice of m inside Z^n are enumerated through the
    // Smith form: the classes are frac(sum_i y_i u_i / diag_i) with
    // 0 <= y_i < diag_i, where u_i is the i-th row of the left transform.
    std::vector<Int> y(n, Int(0));
    for (;;) {
        RatVec r(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (y[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                if (s.u(i, j) == 0) continue;
                r[j] += Rat(y[i] * s.u(i, j), diag[i]);
            }
        }
        Rat hsum(0);
        for (int j = 0; j < n; ++j) {
            r[j] = frac_part(r[j]);
            hsum += r[j];
        }
        if (!is_integer(hsum))
            throw std::logic_error("group element height is not integral");
        Int hint = boost::multiprecision::numerator(hsum);
        int hh = hint.convert_to<int>();
        if (hh < 0 || hh > d)
            throw std::logic_error("group element height out of range");
        g.elements.push_back(std::move(r));
        g.heights.push_back(hh);

        int i = 0;
        while (i < n) {
            y[i] += 1;
            if (y[i] < diag[i]) break;
            y[i] = 0;
            ++i;
        }
        if (i == n) break;
    }

    std::vector<std::size_t> idx(g.elements.size());
    std::iota(idx.begin(), idx.end(), std::size_t(0));
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return g.elements[a] < g.elements[b];
    });
    std::vector<RatVec> se(idx.size());
    std::vector<int> sh(idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t) {
        se[t] = std::move(g.elements[idx[t]]);
        sh[t] = g.heights[idx[t]];
    }
    g.elements = std::move(se);
    g.heights = std::move(sh);
    return g;
}

HStarVector hstar_group(const LatticePolytope& p) {
    LambdaGroup g = lambda_group(p);
    std::vector<Int> h(p.dim() + 1, Int(0));
    for (int t : g.heights) h[t] += 1;
    return HStarVector(std::move(h));
}

HStarVector hstar_auto(const LatticePolytope& p) {
    return is_simplex(p) ? hstar_group(p) : hstar_interp(p);
}

CheckReport identity_checks(const LatticePolytope& p, const HStarVector& h) {
    CheckReport r;
    r.name = "identity-checks";
    int d = p.dim();
    if (h.poly_dim() != d)
        throw DimensionMismatch("h*-vector length does not match polytope dimension");

    r.note("h0", h[0]);
    r.require(h[0] == 1);

    if (d >= 1) {
        Int pts = count_points(p, 1);
        r.note("points", pts);
        r.note("h1", h[1]);
        r.require(h[1] == pts - d - 1);
    }

    Int inner = count_interior(p, 1);
    r.note("interior", inner);
    r.note("hd", h[d]);
    r.require(h[d] == inner);

    int s = h.degree();
    Int codeg = count_interior(p, d + 1 - s);
    r.note("degree", static_cast<long long>(s));
    r.note("codegree-interior", codeg);
    r.require(h[s] == codeg);

    if (d >= 1) r.require(h[d] <= h[1]);

    if (is_simplex(p) && d >= 1) {
        IntMatrix e(d, d);
        for (int i = 1; i <= d; ++i)
            for (int j = 0; j < d; ++j)
                e(i - 1, j) = p.vertices()[i][j] - p.vertices()[0][j];
        Int vol = det(e);
        if (vol < 0) vol = -vol;
        r.note("edge-volume", vol);
        r.note("coeff-sum", h.volume());
        r.require(h.volume() == vol);
        r.branch = "simplex-volume";
    } else {
        r.branch = "sum-only";
    }
    return r;
}

std::vector<Int> poly_add(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

std::vector<Int> poly_sub(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Int> poly_mul_one_minus_t(const std::vector<Int>& a) {
    return poly_mul({Int(1), Int(-1)}, a);
}

bool poly_eq(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Int va = i < a.size() ? a[i] : Int(0);
        Int vb = i < b.size() ? b[i] : Int(0);
        if (va != vb) return false;
    }
    return true;
}

} // namespace hstar
