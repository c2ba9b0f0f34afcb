#include "magspec/smooth_fn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace magspec {

// ---------------------------------------------------------------- Poly2

Poly2::Poly2(std::vector<std::vector<double>> coef) : coef_(std::move(coef)) {
    if (coef_.empty()) coef_ = {{0.0}};
    trim();
}

Poly2 Poly2::monomial(double c, int i, int j) {
    std::vector<std::vector<double>> m(i + 1);
    for (auto& row : m) row.assign(1, 0.0);
    m[i].assign(j + 1, 0.0);
    m[i][j] = c;
    return Poly2(std::move(m));
}

void Poly2::trim() {
    while (coef_.size() > 1) {
        bool all0 = true;
        for (double c : coef_.back())
            if (c != 0.0) { all0 = false; break; }
        if (!all0) break;
        coef_.pop_back();
    }
    for (auto& row : coef_) {
        while (row.size() > 1 && row.back() == 0.0) row.pop_back();
        if (row.empty()) row.assign(1, 0.0);
    }
}

double Poly2::operator()(double x, double y) const {
    // Horner in x of Horner-in-y row values
    double acc = 0.0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        double row = 0.0;
        for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * y + *jt;
        acc = acc * x + row;
    }
    return acc;
}

Poly2 Poly2::dx() const {
    if (coef_.size() == 1) return Poly2();
    std::vector<std::vector<double>> d(coef_.size() - 1);
    for (size_t i = 1; i < coef_.size(); ++i) {
        d[i - 1] = coef_[i];
        for (double& c : d[i - 1]) c *= static_cast<double>(i);
    }
    return Poly2(std::move(d));
}

Poly2 Poly2::dy() const {
    std::vector<std::vector<double>> d(coef_.size());
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i].size() <= 1) { d[i].assign(1, 0.0); continue; }
        d[i].resize(coef_[i].size() - 1);
        for (size_t j = 1; j < coef_[i].size(); ++j)
            d[i][j - 1] = coef_[i][j] * static_cast<double>(j);
    }
    return Poly2(std::move(d));
}

int Poly2::deg_y() const {
    int d = 0;
    for (const auto& row : coef_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

double Poly2::coef(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(coef_.size())) return 0.0;
    if (j >= static_cast<int>(coef_[i].size())) return 0.0;
    return coef_[i][j];
}

bool Poly2::is_zero() const {
    for (const auto& row : coef_)
        for (double c : row)
            if (c != 0.0) return false;
    return true;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    std::vector<std::vector<double>> r(std::max(coef_.size(), o.coef_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        size_t w = 1;
        if (i < coef_.size()) w = std::max(w, coef_[i].size());
        if (i < o.coef_.size()) w = std::max(w, o.coef_[i].size());
        r[i].assign(w, 0.0);
        for (size_t j = 0; j < w; ++j)
            r[i][j] = coef(static_cast<int>(i), static_cast<int>(j)) +
                      o.coef(static_cast<int>(i), static_cast<int>(j));
    }
    return Poly2(std::move(r));
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + o * (-1.0); }

Poly2 Poly2::operator*(double s) const {
    Poly2 r = *this;
    for (auto& row : r.coef_)
        for (double& c : row) c *= s;
    r.trim();
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    std::vector<std::vector<double>> r(coef_.size() + o.coef_.size() - 1);
    const size_t wy = static_cast<size_t>(deg_y() + o.deg_y()) + 1;
    for (auto& row : r) row.assign(wy, 0.0);
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < coef_[i].size(); ++j) {
            if (coef_[i][j] == 0.0) continue;
            for (size_t k = 0; k < o.coef_.size(); ++k)
                for (size_t l = 0; l < o.coef_[k].size(); ++l)
                    r[i + k][j + l] += coef_[i][j] * o.coef_[k][l];
        }
    return Poly2(std::move(r));
}

std::string Poly2::to_string() const {
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < coef_[i].size(); ++j) {
            const double c = coef_[i][j];
            if (c == 0.0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            first = false;
            const double ac = std::abs(c);
            const bool has_var = i > 0 || j > 0;
            if (!has_var || ac != 1.0) {
                os << ac;
                if (has_var) os << "*";
            }
            if (i > 0) { os << "x"; if (i > 1) os << "^" << i; }
            if (i > 0 && j > 0) os << "*";
            if (j > 0) { os << "y"; if (j > 1) os << "^" << j; }
        }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- SmoothFn

struct SmoothFn::Node {
    virtual ~Node() = default;
    virtual double eval(double x, double y) const = 0;
    virtual SmoothFn deriv(int axis) const = 0;
};

namespace {

struct ConstNode final : SmoothFn::Node {
    double c;
    explicit ConstNode(double c_) : c(c_) {}
    double eval(double, double) const override { return c; }
    SmoothFn deriv(int) const override { return SmoothFn(); }
};

struct PolyNode final : SmoothFn::Node {
    Poly2 p;
    explicit PolyNode(Poly2 p_) : p(std::move(p_)) {}
    double eval(double x, double y) const override { return p(x, y); }
    SmoothFn deriv(int axis) const override {
        return SmoothFn::poly(axis == 0 ? p.dx() : p.dy());
    }
};

struct CallbackNode final : SmoothFn::Node {
    SmoothFn::Fn f;
    double step;
    CallbackNode(SmoothFn::Fn f_, double step_) : f(std::move(f_)), step(step_) {}
    double eval(double x, double y) const override { return f(x, y); }
    SmoothFn deriv(int axis) const override {
        // centered 4th-order: (-f(+2s) + 8 f(+s) - 8 f(-s) + f(-2s)) / (12 s)
        auto g = f;
        const double s = step;
        SmoothFn::Fn d;
        if (axis == 0)
            d = [g, s](double x, double y) {
                return (-g(x + 2 * s, y) + 8 * g(x + s, y) - 8 * g(x - s, y) + g(x - 2 * s, y)) /
                       (12 * s);
            };
        else
            d = [g, s](double x, double y) {
                return (-g(x, y + 2 * s) + 8 * g(x, y + s) - 8 * g(x, y - s) + g(x, y - 2 * s)) /
                       (12 * s);
            };
        return SmoothFn::callback(std::move(d), step);
    }
};

struct AddNode final : SmoothFn::Node {
    SmoothFn a, b;
    AddNode(SmoothFn a_, SmoothFn b_) : a(std::move(a_)), b(std::move(b_)) {}
    double eval(double x, double y) const override { return a(x, y) + b(x, y); }
    SmoothFn deriv(int axis) const override { return a.d(axis) + b.d(axis); }
};

struct SubNode final : SmoothFn::Node {
    SmoothFn a, b;
    SubNode(SmoothFn a_, SmoothFn b_) : a(std::move(a_)), b(std::move(b_)) {}
    double eval(double x, double y) const override { return a(x, y) - b(x, y); }
    SmoothFn deriv(int axis) const override { return a.d(axis) - b.d(axis); }
};

struct MulNode final : SmoothFn::Node {
    SmoothFn a, b;
    MulNode(SmoothFn a_, SmoothFn b_) : a(std::move(a_)), b(std::move(b_)) {}
    double eval(double x, double y) const override { return a(x, y) * b(x, y); }
    SmoothFn deriv(int axis) const override { return a.d(axis) * b + a * b.d(axis); }
};

struct DivNode final : SmoothFn::Node {
    SmoothFn a, b;
    DivNode(SmoothFn a_, SmoothFn b_) : a(std::move(a_)), b(std::move(b_)) {}
    double eval(double x, double y) const override { return a(x, y) / b(x, y); }
    SmoothFn deriv(int axis) const override {
        return (a.d(axis) * b - a * b.d(axis)) / (b * b);
    }
};

struct NegNode final : SmoothFn::Node {
    SmoothFn a;
    explicit NegNode(SmoothFn a_) : a(std::move(a_)) {}
    double eval(double x, double y) const override { return -a(x, y); }
    SmoothFn deriv(int axis) const override { return -a.d(axis); }
};

struct SqrtNode final : SmoothFn::Node {
    SmoothFn a;
    explicit SqrtNode(SmoothFn a_) : a(std::move(a_)) {}
    double eval(double x, double y) const override { return std::sqrt(a(x, y)); }
    SmoothFn deriv(int axis) const override {
        return a.d(axis) / (SmoothFn(2.0) * sqrt(a));
    }
};

struct AbsNode final : SmoothFn::Node {
    SmoothFn a;
    explicit AbsNode(SmoothFn a_) : a(std::move(a_)) {}
    double eval(double x, double y) const override { return std::abs(a(x, y)); }
    SmoothFn deriv(int axis) const override {
        SmoothFn sign = SmoothFn::callback(
            [inner = a](double x, double y) { return inner(x, y) < 0 ? -1.0 : 1.0; });
        return sign * a.d(axis);
    }
};

struct PowNode final : SmoothFn::Node {
    SmoothFn a;
    int n;
    PowNode(SmoothFn a_, int n_) : a(std::move(a_)), n(n_) {}
    double eval(double x, double y) const override { return std::pow(a(x, y), n); }
    SmoothFn deriv(int axis) const override {
        return SmoothFn(static_cast<double>(n)) * pow(a, n - 1) * a.d(axis);
    }
};

const Poly2* as_poly(const SmoothFn& f) {
    if (auto* p = dynamic_cast<const PolyNode*>(f.node().get())) return &p->p;
    return nullptr;
}

const double* as_const(const SmoothFn& f) {
    if (auto* c = dynamic_cast<const ConstNode*>(f.node().get())) return &c->c;
    return nullptr;
}

} // namespace

SmoothFn::SmoothFn() : node_(std::make_shared<const ConstNode>(0.0)) {}
SmoothFn::SmoothFn(double c) : node_(std::make_shared<const ConstNode>(c)) {}
SmoothFn::SmoothFn(Poly2 p) : node_(std::make_shared<const PolyNode>(std::move(p))) {}

SmoothFn SmoothFn::x() { return SmoothFn::poly(Poly2::monomial(1.0, 1, 0)); }
SmoothFn SmoothFn::y() { return SmoothFn::poly(Poly2::monomial(1.0, 0, 1)); }

SmoothFn SmoothFn::callback(Fn f, double fd_step) {
    return SmoothFn(NodePtr(std::make_shared<const CallbackNode>(std::move(f), fd_step)));
}

double SmoothFn::operator()(double x, double y) const { return node_->eval(x, y); }

SmoothFn SmoothFn::d(int axis) const {
    if (axis != 0 && axis != 1) throw std::invalid_argument("SmoothFn::d: axis must be 0 or 1");
    return node_->deriv(axis);
}

bool SmoothFn::is_zero() const {
    if (const double* c = as_const(*this)) return *c == 0.0;
    if (const Poly2* p = as_poly(*this)) return p->is_zero();
    return false;
}

SmoothFn operator+(const SmoothFn& a, const SmoothFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (const double* ca = as_const(a))
        if (const double* cb = as_const(b)) return SmoothFn(*ca + *cb);
    if (const Poly2* pa = as_poly(a))
        if (const Poly2* pb = as_poly(b)) return SmoothFn::poly(*pa + *pb);
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const AddNode>(a, b)));
}

SmoothFn operator-(const SmoothFn& a, const SmoothFn& b) {
    if (b.is_zero()) return a;
    if (const double* ca = as_const(a))
        if (const double* cb = as_const(b)) return SmoothFn(*ca - *cb);
    if (const Poly2* pa = as_poly(a))
        if (const Poly2* pb = as_poly(b)) return SmoothFn::poly(*pa - *pb);
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const SubNode>(a, b)));
}

SmoothFn operator*(const SmoothFn& a, const SmoothFn& b) {
    if (a.is_zero() || b.is_zero()) return SmoothFn();
    if (const double* ca = as_const(a)) {
        if (*ca == 1.0) return b;
        if (const double* cb = as_const(b)) return SmoothFn(*ca * *cb);
        if (const Poly2* pb = as_poly(b)) return SmoothFn::poly(*pb * *ca);
    }
    if (const double* cb = as_const(b)) {
        if (*cb == 1.0) return a;
        if (const Poly2* pa = as_poly(a)) return SmoothFn::poly(*pa * *cb);
    }
    if (const Poly2* pa = as_poly(a))
        if (const Poly2* pb = as_poly(b)) return SmoothFn::poly(*pa * *pb);
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const MulNode>(a, b)));
}

SmoothFn operator/(const SmoothFn& a, const SmoothFn& b) {
    if (a.is_zero()) return SmoothFn();
    if (const double* cb = as_const(b)) {
        if (*cb == 1.0) return a;
        return a * SmoothFn(1.0 / *cb);
    }
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const DivNode>(a, b)));
}

SmoothFn operator-(const SmoothFn& a) {
    if (const double* c = as_const(a)) return SmoothFn(-*c);
    if (const Poly2* p = as_poly(a)) return SmoothFn::poly(*p * -1.0);
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const NegNode>(a)));
}

SmoothFn sqrt(const SmoothFn& a) {
    if (const double* c = as_const(a)) return SmoothFn(std::sqrt(*c));
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const SqrtNode>(a)));
}

SmoothFn abs(const SmoothFn& a) {
    if (const double* c = as_const(a)) return SmoothFn(std::abs(*c));
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const AbsNode>(a)));
}

SmoothFn pow(const SmoothFn& a, int n) {
    if (n == 0) return SmoothFn(1.0);
    if (n == 1) return a;
    if (n < 0) return SmoothFn(1.0) / pow(a, -n);
    return SmoothFn(SmoothFn::NodePtr(std::make_shared<const PowNode>(a, n)));
}

} // namespace magspec
