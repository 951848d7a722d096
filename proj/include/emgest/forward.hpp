#pragma once

// Volume-integral forward solver for scattering by a penetrable medium.  The
// total field satisfies (I - T) E = E^i on the voxel lattice with
//
//   (T E)(x) = -k^2 int Phi_k(x,y) m(y) E(y) dy
//              + grad int (1/n) grad n . E Phi_k(x,y) dy,        m = 1 - n.
//
// The convolution kernel uses exact voxel-box integration of Phi_k (analytic
// singularity extraction on the self voxel, Gauss boxes elsewhere) and is
// applied through FFT-based structured multiplication on the lattice.  For
// sharp contrasts (rho = 0) the gradient term carries no volume density and
// is omitted; for mollified contrasts it is assembled via finite differences
// of n and of the single-layer potential.  See docs/quadrature.md.

#include <fftw3.h>

#include <memory>
#include <mutex>

#include "emgest/fields.hpp"
#include "emgest/shapes.hpp"
#include "emgest/sphere.hpp"

namespace emgest {

struct SolverOptions {
    double tolerance = 1e-8;
    int max_iterations = 500;
    int restart = 50;
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
};

namespace detail {

inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

struct GaussRule {
    const double* x;
    const double* w;
    int n;
};

inline GaussRule gauss_rule(int n) {
    static const double x2[] = {-0.5773502691896258, 0.5773502691896258};
    static const double w2[] = {1.0, 1.0};
    static const double x4[] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                0.8611363115940526};
    static const double w4[] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                0.3478548451374538};
    static const double x6[] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                                0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
    static const double w6[] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                                0.4679139345726910, 0.3607615730481386, 0.1713244923791704};
    switch (n) {
        case 2: return {x2, w2, 2};
        case 4: return {x4, w4, 4};
        default: return {x6, w6, 6};
    }
}

// int over the cell centered at c (edge `cell`) of f(y), optionally split
// into sub^3 congruent subcells first.
template <class F>
Complex gauss_box(const F& f, const Vec3& c, double cell, int npts, int sub = 1) {
    const GaussRule g = gauss_rule(npts);
    const double sc = cell / sub;
    const double h = 0.5 * sc;
    Complex total{};
    for (int a = 0; a < sub; ++a)
        for (int b = 0; b < sub; ++b)
            for (int d = 0; d < sub; ++d) {
                const Vec3 cc{c.x - 0.5 * cell + (a + 0.5) * sc,
                              c.y - 0.5 * cell + (b + 0.5) * sc,
                              c.z - 0.5 * cell + (d + 0.5) * sc};
                Complex s{};
                for (int i = 0; i < g.n; ++i)
                    for (int j = 0; j < g.n; ++j)
                        for (int l = 0; l < g.n; ++l) {
                            const Vec3 p{cc.x + h * g.x[i], cc.y + h * g.x[j],
                                         cc.z + h * g.x[l]};
                            s += g.w[i] * g.w[j] * g.w[l] * f(p);
                        }
                total += s * (h * h * h);
            }
    return total;
}

// int of Phi_k over the voxel box centered at `center` relative to an
// evaluation point at the origin.  `self` marks the singular voxel.
inline Complex kernel_box_integral(double k, const Vec3& center, double cell, bool self) {
    if (self) {
        // Split off every term of Phi that is not smooth at the origin:
        // 1/(4 pi r) and the odd radial Taylor terms r and r^3 (|y| has a
        // cone point, even powers are polynomials).  Their box integrals are
        // closed forms via the dimensionless moments of the unit cell
        //   int 1/r = c0 cell^2,  int r = C1 cell^4,  int r^3 = C3 cell^6,
        // and the remainder integrates cleanly with a single Gauss-6 box.
        static const double c0 =
            (6.0 * std::log((1.0 + std::sqrt(3.0)) / std::sqrt(2.0)) - kPi / 2.0) / (4.0 * kPi);
        static const double C1 = 0.48029597822752634;
        static const double C3 = 0.13767446367392575;
        const double c2 = cell * cell;
        const Complex analytic{c0 * c2 - k * k * C1 * c2 * c2 / (8.0 * kPi) +
                                   std::pow(k, 4) * C3 * c2 * c2 * c2 / (96.0 * kPi),
                               0.0};
        auto smooth = [k](const Vec3& y) -> Complex {
            const double r = norm(y);
            if (k * r < 1e-8) return Complex(0.0, k / (4.0 * kPi));
            return (std::exp(kImag * (k * r)) - 1.0) / (4.0 * kPi * r) +
                   k * k * r / (8.0 * kPi) - std::pow(k, 4) * r * r * r / (96.0 * kPi);
        };
        return analytic + gauss_box(smooth, center, cell, 6);
    }
    auto phi = [k](const Vec3& y) -> Complex {
        const double r = norm(y);
        return std::exp(kImag * (k * r)) / (4.0 * kPi * r);
    };
    // The 1/r roughness on touching neighbors needs subdivision; farther out
    // a single Gauss-4 box already sits below 1e-7 relative when the cell is
    // a modest fraction of the wavelength.  Oscillatory cells (k cell > 1.6)
    // get one extra subdivision level to hold that line.
    const double dist = std::max(std::abs(center.x), std::max(std::abs(center.y),
                                                              std::abs(center.z)));
    const bool oscillatory = k * cell > 1.6;
    const int sub = dist <= 1.5 * cell ? (oscillatory ? 3 : 2) : (oscillatory ? 2 : 1);
    return gauss_box(phi, center, cell, 4, sub);
}

// FFT workspace for circular convolution with a fixed scalar kernel on a
// padded lattice.  Not copyable; one instance per solve context.
class ToeplitzConvolver {
  public:
    ToeplitzConvolver(const std::array<int, 3>& dims, std::vector<Complex> kernel_wrapped)
        : n_(dims) {
        for (int c = 0; c < 3; ++c) p_[c] = 2 * n_[c];
        count_ = size_t(p_[0]) * p_[1] * p_[2];
        buf_ = static_cast<Complex*>(fftw_malloc(sizeof(Complex) * count_));
        if (!buf_) throw std::bad_alloc();
        {
            std::lock_guard<std::mutex> lock(fftw_planner_mutex());
            // note: fftw uses row-major with the LAST dimension contiguous;
            // our index is (l * ny + j) * nx + i, so pass (pz, py, px).
            fwd_ = fftw_plan_dft_3d(p_[2], p_[1], p_[0], reinterpret_cast<fftw_complex*>(buf_),
                                    reinterpret_cast<fftw_complex*>(buf_), FFTW_FORWARD,
                                    FFTW_ESTIMATE);
            bwd_ = fftw_plan_dft_3d(p_[2], p_[1], p_[0], reinterpret_cast<fftw_complex*>(buf_),
                                    reinterpret_cast<fftw_complex*>(buf_), FFTW_BACKWARD,
                                    FFTW_ESTIMATE);
        }
        // kernel_wrapped is already laid out on the padded lattice
        std::copy(kernel_wrapped.begin(), kernel_wrapped.end(), buf_);
        fftw_execute(fwd_);
        khat_.assign(buf_, buf_ + count_);
    }

    ToeplitzConvolver(const ToeplitzConvolver&) = delete;
    ToeplitzConvolver& operator=(const ToeplitzConvolver&) = delete;

    ~ToeplitzConvolver() {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(buf_);
    }

    size_t padded_index(int i, int j, int l) const {
        return (size_t(l) * p_[1] + j) * p_[0] + i;
    }

    // out[i] = sum_j K[i - j] in[j] on the unpadded lattice.
    void convolve(const std::vector<Complex>& in, std::vector<Complex>& out) {
        std::fill(buf_, buf_ + count_, Complex{});
        for (int l = 0; l < n_[2]; ++l)
            for (int j = 0; j < n_[1]; ++j) {
                const size_t src = (size_t(l) * n_[1] + j) * n_[0];
                const size_t dst = padded_index(0, j, l);
                std::copy(in.begin() + src, in.begin() + src + n_[0], buf_ + dst);
            }
        fftw_execute(fwd_);
        const double scale = 1.0 / double(count_);
        for (size_t i = 0; i < count_; ++i) buf_[i] *= khat_[i] * scale;
        fftw_execute(bwd_);
        out.resize(size_t(n_[0]) * n_[1] * n_[2]);
        for (int l = 0; l < n_[2]; ++l)
            for (int j = 0; j < n_[1]; ++j) {
                const size_t src = padded_index(0, j, l);
                const size_t dst = (size_t(l) * n_[1] + j) * n_[0];
                std::copy(buf_ + src, buf_ + src + n_[0], out.begin() + dst);
            }
    }

    const std::array<int, 3>& padded_dims() const { return p_; }

  private:
    std::array<int, 3> n_{}, p_{};
    size_t count_ = 0;
    Complex* buf_ = nullptr;
    std::vector<Complex> khat_;
    fftw_plan fwd_{}, bwd_{};
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Discretized scattering operator
// ---------------------------------------------------------------------------

class DiscreteSystem {
  public:
    DiscreteSystem(std::shared_ptr<const ContrastField> contrast, double k)
        : c_(std::move(contrast)), k_(k) {
        if (!c_) throw std::invalid_argument("DiscreteSystem: null contrast");
        if (!(k > 0.0)) throw std::invalid_argument("DiscreteSystem: wavenumber must be positive");
        const auto& d = c_->dims;

        // wrapped kernel table on the padded lattice
        std::vector<Complex> kw(size_t(2 * d[0]) * (2 * d[1]) * (2 * d[2]), Complex{});
        const double cell = c_->cell;
        for (int l = -(d[2] - 1); l <= d[2] - 1; ++l)
            for (int j = -(d[1] - 1); j <= d[1] - 1; ++j)
                for (int i = -(d[0] - 1); i <= d[0] - 1; ++i) {
                    const bool self = i == 0 && j == 0 && l == 0;
                    const Complex v = detail::kernel_box_integral(
                        k, Vec3{i * cell, j * cell, l * cell}, cell, self);
                    const size_t idx =
                        (size_t((l + 2 * d[2]) % (2 * d[2])) * (2 * d[1]) +
                         size_t((j + 2 * d[1]) % (2 * d[1]))) *
                            (2 * d[0]) +
                        size_t((i + 2 * d[0]) % (2 * d[0]));
                    kw[idx] = v;
                }
        conv_ = std::make_unique<detail::ToeplitzConvolver>(d, std::move(kw));

        grad_term_ = c_->rho > 0.0;
        if (grad_term_) precompute_grad_n();
    }

    const ContrastField& contrast() const { return *c_; }
    std::shared_ptr<const ContrastField> contrast_ptr() const { return c_; }
    double k() const { return k_; }
    bool has_gradient_term() const { return grad_term_; }

    // out = T in  (both indexed like the voxel lattice)
    void apply_T(const std::vector<CVec3>& in, std::vector<CVec3>& out) {
        const size_t nvox = c_->voxel_count();
        if (in.size() != nvox) throw std::invalid_argument("apply_T: field size mismatch");
        out.assign(nvox, CVec3{});
        std::vector<Complex> u(nvox), v;
        for (int comp = 0; comp < 3; ++comp) {
            for (size_t i = 0; i < nvox; ++i) u[i] = c_->m[i] * in[i][comp];
            conv_->convolve(u, v);
            const Complex s = -k_ * k_;
            for (size_t i = 0; i < nvox; ++i) {
                if (comp == 0)
                    out[i].x = s * v[i];
                else if (comp == 1)
                    out[i].y = s * v[i];
                else
                    out[i].z = s * v[i];
            }
        }
        if (grad_term_) {
            const std::vector<Complex> q = gradient_density(in);
            conv_->convolve(q, v);  // single-layer potential of q on the lattice
            add_fd_gradient(v, out);
        }
    }

    // q = (1/n) grad n . E, the density of the gradient term (zero without
    // mollification).
    std::vector<Complex> gradient_density(const std::vector<CVec3>& E) const {
        std::vector<Complex> q(c_->voxel_count(), Complex{});
        if (!grad_term_) return q;
        for (size_t i = 0; i < q.size(); ++i)
            q[i] = dot(grad_n_[i], E[i]) / c_->n[i];
        return q;
    }

  private:
    void precompute_grad_n() {
        const auto& d = c_->dims;
        grad_n_.assign(c_->voxel_count(), CVec3{});
        auto at = [&](int i, int j, int l) -> Complex {
            if (i < 0 || j < 0 || l < 0 || i >= d[0] || j >= d[1] || l >= d[2])
                return Complex{1.0, 0.0};  // index is 1 outside the lattice
            return c_->n[c_->index(i, j, l)];
        };
        const double inv2h = 1.0 / (2.0 * c_->cell);
        for (int l = 0; l < d[2]; ++l)
            for (int j = 0; j < d[1]; ++j)
                for (int i = 0; i < d[0]; ++i)
                    grad_n_[c_->index(i, j, l)] = {
                        (at(i + 1, j, l) - at(i - 1, j, l)) * inv2h,
                        (at(i, j + 1, l) - at(i, j - 1, l)) * inv2h,
                        (at(i, j, l + 1) - at(i, j, l - 1)) * inv2h};
    }

    // out += grad psi with central differences inside and second-order
    // one-sided stencils on the lattice faces.
    void add_fd_gradient(const std::vector<Complex>& psi, std::vector<CVec3>& out) const {
        const auto& d = c_->dims;
        const double inv2h = 1.0 / (2.0 * c_->cell);
        auto p = [&](int i, int j, int l) { return psi[c_->index(i, j, l)]; };
        for (int l = 0; l < d[2]; ++l)
            for (int j = 0; j < d[1]; ++j)
                for (int i = 0; i < d[0]; ++i) {
                    auto diff = [&](int axis) -> Complex {
                        const int idx[3] = {i, j, l};
                        const int n = d[axis];
                        auto shifted = [&](int step) {
                            int ii = i, jj = j, ll = l;
                            (axis == 0 ? ii : axis == 1 ? jj : ll) += step;
                            return p(ii, jj, ll);
                        };
                        if (idx[axis] == 0)
                            return n >= 3 ? (-3.0 * shifted(0) + 4.0 * shifted(1) - shifted(2)) *
                                                inv2h
                                          : (shifted(1) - shifted(0)) * (2.0 * inv2h);
                        if (idx[axis] == n - 1)
                            return n >= 3 ? (3.0 * shifted(0) - 4.0 * shifted(-1) + shifted(-2)) *
                                                inv2h
                                          : (shifted(0) - shifted(-1)) * (2.0 * inv2h);
                        return (shifted(1) - shifted(-1)) * inv2h;
                    };
                    auto& o = out[c_->index(i, j, l)];
                    o.x += diff(0);
                    o.y += diff(1);
                    o.z += diff(2);
                }
    }

    std::shared_ptr<const ContrastField> c_;
    double k_;
    bool grad_term_ = false;
    std::vector<CVec3> grad_n_;
    std::unique_ptr<detail::ToeplitzConvolver> conv_;
};

inline DiscreteSystem assemble(std::shared_ptr<const ContrastField> contrast, double k) {
    return DiscreteSystem(std::move(contrast), k);
}

// ---------------------------------------------------------------------------
// Restarted GMRES on flattened complex vectors
// ---------------------------------------------------------------------------

namespace detail {

template <class Op>
SolveStats gmres(const Op& apply_A, const std::vector<Complex>& b, std::vector<Complex>& x,
                 const SolverOptions& opt) {
    const size_t n = b.size();
    auto nrm = [](const std::vector<Complex>& v) {
        double s = 0.0;
        for (const Complex& c : v) s += std::norm(c);
        return std::sqrt(s);
    };
    const double bnorm = nrm(b);
    SolveStats stats;
    if (bnorm == 0.0) {
        x.assign(n, Complex{});
        stats.converged = true;
        return stats;
    }

    std::vector<Complex> r(n), w(n);
    const int m = std::max(1, opt.restart);
    std::vector<std::vector<Complex>> V;
    std::vector<std::vector<Complex>> H(m + 1, std::vector<Complex>(m, Complex{}));
    std::vector<Complex> cs(m), sn(m), g(m + 1);

    int total_iters = 0;
    while (true) {
        apply_A(x, r);
        for (size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
        double beta = nrm(r);
        stats.residual = beta / bnorm;
        stats.iterations = total_iters;
        if (stats.residual <= opt.tolerance) {
            stats.converged = true;
            return stats;
        }
        if (total_iters >= opt.max_iterations) return stats;

        V.assign(1, r);
        for (Complex& c : V[0]) c *= 1.0 / beta;
        std::fill(g.begin(), g.end(), Complex{});
        g[0] = beta;

        int j = 0;
        for (; j < m && total_iters < opt.max_iterations; ++j, ++total_iters) {
            apply_A(V[j], w);
            // modified Gram-Schmidt
            for (int i = 0; i <= j; ++i) {
                Complex hij{};
                for (size_t t = 0; t < n; ++t) hij += w[t] * std::conj(V[i][t]);
                H[i][j] = hij;
                for (size_t t = 0; t < n; ++t) w[t] -= hij * V[i][t];
            }
            const double hn = nrm(w);
            H[j + 1][j] = hn;
            if (hn > 0.0) {
                V.push_back(w);
                for (Complex& c : V.back()) c *= 1.0 / hn;
            }
            // apply and update Givens rotations
            for (int i = 0; i < j; ++i) {
                const Complex t = cs[i] * H[i][j] + sn[i] * H[i + 1][j];
                H[i + 1][j] = -std::conj(sn[i]) * H[i][j] + std::conj(cs[i]) * H[i + 1][j];
                H[i][j] = t;
            }
            const double denom =
                std::sqrt(std::norm(H[j][j]) + std::norm(H[j + 1][j]));
            if (denom == 0.0) {
                cs[j] = 1.0;
                sn[j] = 0.0;
            } else {
                cs[j] = std::conj(H[j][j]) / denom;
                sn[j] = std::conj(H[j + 1][j]) / denom;
            }
            const Complex t = cs[j] * H[j][j] + sn[j] * H[j + 1][j];
            H[j][j] = t;
            H[j + 1][j] = 0.0;
            g[j + 1] = -std::conj(sn[j]) * g[j];
            g[j] = cs[j] * g[j];
            stats.residual = std::abs(g[j + 1]) / bnorm;
            if (stats.residual <= opt.tolerance) {
                ++j;
                break;
            }
            if (hn == 0.0) {
                ++j;
                break;  // exact Krylov breakdown: solution reached
            }
        }
        // back substitution for the y minimizer, then update x
        std::vector<Complex> y(j);
        for (int i = j - 1; i >= 0; --i) {
            Complex s = g[i];
            for (int t = i + 1; t < j; ++t) s -= H[i][t] * y[t];
            y[i] = s / H[i][i];
        }
        for (int i = 0; i < j; ++i)
            for (size_t t = 0; t < n; ++t) x[t] += y[i] * V[i][t];
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Solve and field evaluation
// ---------------------------------------------------------------------------

struct VolumeSolution {
    std::shared_ptr<const ContrastField> contrast;
    double k = 0.0;
    std::vector<CVec3> incident;  // E^i at voxel centers
    std::vector<CVec3> total;     // E at voxel centers
    std::vector<Complex> q;       // gradient-term density (empty when unused)
    SolveStats stats;
};

inline VolumeSolution solve(DiscreteSystem& sys, std::vector<CVec3> incident,
                            const SolverOptions& opt = {}) {
    const size_t nvox = sys.contrast().voxel_count();
    if (incident.size() != nvox) throw std::invalid_argument("solve: incident size mismatch");

    auto flatten = [nvox](const std::vector<CVec3>& v, std::vector<Complex>& f) {
        f.resize(3 * nvox);
        for (size_t i = 0; i < nvox; ++i) {
            f[3 * i] = v[i].x;
            f[3 * i + 1] = v[i].y;
            f[3 * i + 2] = v[i].z;
        }
    };
    auto unflatten = [nvox](const std::vector<Complex>& f, std::vector<CVec3>& v) {
        v.resize(nvox);
        for (size_t i = 0; i < nvox; ++i) v[i] = {f[3 * i], f[3 * i + 1], f[3 * i + 2]};
    };

    std::vector<Complex> b, x;
    flatten(incident, b);
    x = b;  // E^i is the natural initial guess; zero contrast converges at once

    std::vector<CVec3> tin(nvox), tout(nvox);
    auto apply_A = [&](const std::vector<Complex>& in, std::vector<Complex>& out) {
        unflatten(in, tin);
        sys.apply_T(tin, tout);
        out.resize(in.size());
        for (size_t i = 0; i < nvox; ++i) {
            out[3 * i] = in[3 * i] - tout[i].x;
            out[3 * i + 1] = in[3 * i + 1] - tout[i].y;
            out[3 * i + 2] = in[3 * i + 2] - tout[i].z;
        }
    };

    const SolveStats stats = detail::gmres(apply_A, b, x, opt);
    if (!stats.converged)
        throw SolverError("forward solve did not reach tolerance " +
                          std::to_string(opt.tolerance) + " within " +
                          std::to_string(opt.max_iterations) + " iterations (residual " +
                          std::to_string(stats.residual) + ")");

    VolumeSolution sol;
    sol.contrast = sys.contrast_ptr();
    sol.k = sys.k();
    sol.incident = std::move(incident);
    unflatten(x, sol.total);
    sol.q = sys.gradient_density(sol.total);
    sol.stats = stats;
    return sol;
}

struct FarFieldResult {
    TangentialFieldOnSphere field;
    double radial_residual = 0.0;  // norm ratio removed by the tangential projection
};

// Far-field pattern of the scattered field in the frame of the contrast
// lattice: E^inf(x^) = -(k^2 / 4 pi) int e^{-ik x^.y} m E dy, projected onto
// the tangent plane (the gradient term radiates purely radially).
inline FarFieldResult far_field(const VolumeSolution& sol,
                                std::shared_ptr<const SphereGrid> grid) {
    if (!grid) throw std::invalid_argument("far_field: null grid");
    const ContrastField& c = *sol.contrast;
    const double k = sol.k;
    const double vol = c.cell * c.cell * c.cell;

    FarFieldResult out;
    out.field.grid = grid;
    out.field.k = k;
    out.field.samples.resize(grid->size());

    double radial2 = 0.0, total2 = 0.0;
    for (size_t gi = 0; gi < grid->size(); ++gi) {
        const Vec3& xh = grid->nodes[gi];
        CVec3 s{};
        for (int l = 0; l < c.dims[2]; ++l)
            for (int j = 0; j < c.dims[1]; ++j)
                for (int i = 0; i < c.dims[0]; ++i) {
                    const size_t idx = c.index(i, j, l);
                    const Complex mv = c.m[idx];
                    if (mv == Complex{}) continue;
                    const Vec3 y = c.center(i, j, l);
                    s += (mv * std::exp(kImag * (-k * dot(xh, y)))) * sol.total[idx];
                }
        // exact box transform of the piecewise-constant density
        auto sinc = [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; };
        const double box = sinc(0.5 * k * c.cell * xh.x) * sinc(0.5 * k * c.cell * xh.y) *
                           sinc(0.5 * k * c.cell * xh.z);
        s = s * (-k * k / (4.0 * kPi) * vol * box);

        const Complex radial = dot(xh, s);
        radial2 += grid->weights[gi] * std::norm(radial);
        total2 += grid->weights[gi] * norm2(s);
        out.field.samples[gi] = s - CVec3(xh) * radial;
    }
    out.radial_residual = total2 > 0.0 ? std::sqrt(radial2 / total2) : 0.0;
    return out;
}

// Scattered field at an exterior point of the lattice frame.
inline CVec3 scattered_field_at(const VolumeSolution& sol, const Vec3& x) {
    const ContrastField& c = *sol.contrast;
    const double k = sol.k;
    const double cell = c.cell;

    // reject points inside (or hugging) the inflated support box
    const Vec3 lo = c.origin;
    const Vec3 hi = c.origin + Vec3{c.dims[0] * cell, c.dims[1] * cell, c.dims[2] * cell};
    const double margin = 0.5 * cell;
    if (x.x > lo.x - margin && x.x < hi.x + margin && x.y > lo.y - margin &&
        x.y < hi.y + margin && x.z > lo.z - margin && x.z < hi.z + margin)
        throw std::invalid_argument(
            "scattered_field_at: point lies inside the scatterer's support box");

    const double vol = cell * cell * cell;
    const bool grad = !sol.q.empty() && c.rho > 0.0;
    CVec3 s{};
    for (int l = 0; l < c.dims[2]; ++l)
        for (int j = 0; j < c.dims[1]; ++j)
            for (int i = 0; i < c.dims[0]; ++i) {
                const size_t idx = c.index(i, j, l);
                const Complex mv = c.m[idx];
                const Complex qv = grad ? sol.q[idx] : Complex{};
                if (mv == Complex{} && qv == Complex{}) continue;
                const Vec3 y = c.center(i, j, l);
                const double dist = norm(x - y);
                // Gauss-2 suffices in the far zone; a bare midpoint rule
                // would pick up a coherent phase-curvature bias there.
                auto phi = [&](const Vec3& yy) { return fundamental_solution(k, x, yy); };
                const Complex w = detail::gauss_box(phi, y, cell, dist <= 6.0 * cell ? 4 : 2);
                if (mv != Complex{}) s += (-k * k * w * mv) * sol.total[idx];
                if (qv != Complex{}) {
                    // midpoint gradient kernel; adequate because q lives in a
                    // thin mollification shell
                    s += (qv * vol) * grad_fundamental_solution(k, x, y);
                }
            }
    return s;
}

// ---------------------------------------------------------------------------
// Receivers and end-to-end measurement simulation
// ---------------------------------------------------------------------------

// Uniform receiver grid on a square patch in the x2x3-plane centered at the
// world origin (the device aperture).
struct ReceiverGrid {
    int count = 11;     // receivers per side
    double side = 1.0;  // patch edge length
    std::vector<Vec3> positions;
};

inline ReceiverGrid make_receiver_grid(int count = 11, double side = 1.0) {
    if (count < 2) throw std::invalid_argument("make_receiver_grid: need at least 2 per side");
    if (!(side > 0.0)) throw std::invalid_argument("make_receiver_grid: side must be positive");
    ReceiverGrid g;
    g.count = count;
    g.side = side;
    g.positions.reserve(size_t(count) * count);
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b) {
            const double u = -0.5 * side + side * double(a) / (count - 1);
            const double v = -0.5 * side + side * double(b) / (count - 1);
            g.positions.push_back({0.0, u, v});
        }
    return g;
}

enum class FarFieldMode {
    kTrue,       // far-field functional of the volume potential
    kRescaled10  // near field at radius 10 lambda, rescaled by R e^{-ikR}
};

struct Measurement {
    std::string shape_id;
    Vec3 z;  // placement used for simulation (truth metadata)
    double k = 0.0;
    TangentialFieldOnSphere far;
    double far_radial_residual = 0.0;
    std::vector<CVec3> near;  // scattered field at the world receiver positions
    SolveStats stats;
};

// Solves the scattering problem in shape-local coordinates (t = y - z) and
// maps fields back to the world frame: the far field about the world origin
// acquires the exact translation phase e^{-ik x^.z}; near fields are the
// local volume potential evaluated at x - z.
inline Measurement simulate_measurement(const PlacedShape& placed, Complex n_inside,
                                        int resolution, double rho, double k,
                                        const SourceConfig& sources,
                                        std::shared_ptr<const SphereGrid> grid,
                                        const std::vector<Vec3>& receivers,
                                        const SolverOptions& opt = {},
                                        FarFieldMode mode = FarFieldMode::kTrue) {
    sources.validate();
    const bool translated = !(placed.z == Vec3{0.0, 0.0, 0.0});

    auto contrast =
        std::make_shared<const ContrastField>(rasterize(placed.shape, n_inside, resolution, rho));
    DiscreteSystem sys(contrast, k);

    std::vector<CVec3> Ei(contrast->voxel_count());
    for (int l = 0; l < contrast->dims[2]; ++l)
        for (int j = 0; j < contrast->dims[1]; ++j)
            for (int i = 0; i < contrast->dims[0]; ++i) {
                const Vec3 t = contrast->center(i, j, l);
                const Vec3 world = translated ? t + placed.z : t;
                Ei[contrast->index(i, j, l)] = incident_field(k, sources, world);
            }

    VolumeSolution sol = solve(sys, std::move(Ei), opt);

    Measurement meas;
    meas.shape_id = placed.shape.id;
    meas.z = placed.z;
    meas.k = k;
    meas.stats = sol.stats;

    if (mode == FarFieldMode::kTrue) {
        FarFieldResult ff = far_field(sol, grid);
        if (translated)
            for (size_t i = 0; i < grid->size(); ++i)
                ff.field.samples[i] =
                    ff.field.samples[i] * std::exp(kImag * (-k * dot(grid->nodes[i], placed.z)));
        meas.far = std::move(ff.field);
        meas.far_radial_residual = ff.radial_residual;
    } else {
        // evaluate the scattered near field on a sphere of radius 10 lambda
        // about the world origin and strip the spherical spreading factor
        const double R = 10.0 * (2.0 * kPi / k);
        meas.far.grid = grid;
        meas.far.k = k;
        meas.far.samples.resize(grid->size());
        const Complex scale = R * std::exp(kImag * (-k * R));
        double radial2 = 0.0, total2 = 0.0;
        for (size_t i = 0; i < grid->size(); ++i) {
            const Vec3 xw = grid->nodes[i] * R;
            const CVec3 e = scattered_field_at(sol, translated ? xw - placed.z : xw) * scale;
            const Complex radial = dot(grid->nodes[i], e);
            radial2 += grid->weights[i] * std::norm(radial);
            total2 += grid->weights[i] * norm2(e);
            meas.far.samples[i] = e - CVec3(grid->nodes[i]) * radial;
        }
        meas.far_radial_residual = total2 > 0.0 ? std::sqrt(radial2 / total2) : 0.0;
    }

    meas.near.reserve(receivers.size());
    for (const Vec3& x : receivers)
        meas.near.push_back(scattered_field_at(sol, translated ? x - placed.z : x));
    return meas;
}

}  // namespace emgest
