#ifndef MAGSPEC_SMOOTH_FN_HPP
#define MAGSPEC_SMOOTH_FN_HPP

#include <functional>
#include <memory>
#include <vector>

namespace magspec {

/// Dense bivariate polynomial sum c[i][j] x^i y^j. Closed under
/// differentiation, so derived fields stay exact for polynomial inputs.
class Poly2 {
public:
    Poly2() : coef_{{0.0}} {}
    explicit Poly2(double c) : coef_{{c}} {}
    /// coef[i][j] multiplies x^i y^j; rows may be ragged.
    explicit Poly2(std::vector<std::vector<double>> coef);

    static Poly2 monomial(double c, int i, int j);

    double operator()(double x, double y) const;
    Poly2 dx() const;
    Poly2 dy() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(double s) const;

    int deg_x() const { return static_cast<int>(coef_.size()) - 1; }
    int deg_y() const;
    double coef(int i, int j) const;
    bool is_zero() const;

    /// Canonical "c*x^i*y^j + ..." form; used by the config round-trip.
    std::string to_string() const;

private:
    std::vector<std::vector<double>> coef_;
    void trim();
};

/**
 * A smooth scalar function of (x,y) supporting exact differentiation through
 * arithmetic combinators. Polynomial leaves differentiate exactly; raw
 * callback leaves fall back to 4th-order central differences of the callback.
 * Immutable and cheap to copy (shared expression nodes).
 */
class SmoothFn {
public:
    using Fn = std::function<double(double, double)>;

    SmoothFn();                 // identically zero
    SmoothFn(double c);         // constant
    explicit SmoothFn(Poly2 p);

    static SmoothFn poly(Poly2 p) { return SmoothFn(std::move(p)); }
    static SmoothFn x();
    static SmoothFn y();
    /// Wrap an arbitrary callback; derivatives use centered 4th-order
    /// differences with the given step.
    static SmoothFn callback(Fn f, double fd_step = 2e-2);

    double operator()(double x, double y) const;
    SmoothFn d(int axis) const; // 0: d/dx, 1: d/dy
    SmoothFn dx() const { return d(0); }
    SmoothFn dy() const { return d(1); }

    bool is_zero() const;       // structural zero (cheap, not semantic)

    friend SmoothFn operator+(const SmoothFn& a, const SmoothFn& b);
    friend SmoothFn operator-(const SmoothFn& a, const SmoothFn& b);
    friend SmoothFn operator*(const SmoothFn& a, const SmoothFn& b);
    friend SmoothFn operator/(const SmoothFn& a, const SmoothFn& b);
    friend SmoothFn operator-(const SmoothFn& a);

    friend SmoothFn sqrt(const SmoothFn& a);
    friend SmoothFn abs(const SmoothFn& a);  // d|f| = sign(f) df
    friend SmoothFn pow(const SmoothFn& a, int n);

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    explicit SmoothFn(NodePtr n) : node_(std::move(n)) {}
    const NodePtr& node() const { return node_; }

private:
    NodePtr node_;
};

} // namespace magspec

#endif
