#include "pgcurve/natural.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "pgcurve/errors.hpp"
#include "pgcurve/interpolate.hpp"

namespace pg {

const char* to_string(CurveFamily family) {
    switch (family) {
    case CurveFamily::GeneralHelix:  return "general helix";
    case CurveFamily::CircularHelix: return "circular helix";
    case CurveFamily::Salkowski:     return "salkowski";
    case CurveFamily::AntiSalkowski: return "anti-salkowski";
    }
    return "unknown family";
}

namespace {

void validate_equations(const NaturalEquations& neq, const char* who) {
    if (!neq.kappa || !neq.tau)
        raise(Errc::InvalidArgument, std::string(who) + ": kappa and tau maps are required");
    if (!(neq.s_lo < neq.s_hi) || !std::isfinite(neq.s_lo) || !std::isfinite(neq.s_hi))
        raise(Errc::InvalidArgument, std::string(who) + ": empty or non-finite domain");
}

double checked_kappa(const NaturalEquations& neq, double s, const char* who) {
    const double k = neq.kappa(s);
    if (!std::isfinite(k))
        raise(Errc::NumericallyUnstable,
              std::string(who) + ": kappa is not finite at s = " + std::to_string(s));
    if (!(k > 0.0))
        raise(Errc::NonPositiveCurvature,
              std::string(who) + ": kappa(s) = " + std::to_string(k) +
                  " at s = " + std::to_string(s));
    return k;
}

double checked_tau(const NaturalEquations& neq, double s, const char* who) {
    const double t = neq.tau(s);
    if (!std::isfinite(t))
        raise(Errc::NumericallyUnstable,
              std::string(who) + ": tau is not finite at s = " + std::to_string(s));
    return t;
}

// Central difference of a scalar map; used for kappa' in the synthesized
// third derivative.
double scalar_derivative(const std::function<double(double)>& f, double s) {
    const double h = 1e-5 * std::max(1.0, std::abs(s));
    return (f(s + h) - f(s - h)) / (2.0 * h);
}

Frame assemble_frame(CausalCharacter character, double T,
                     double e1y, double e1z, double kappa, double tau) {
    const double sh = std::sinh(T);
    const double ch = std::cosh(T);
    Frame f;
    f.e1 = {1.0, e1y, e1z};
    f.kappa = kappa;
    f.tau = tau;
    if (character == CausalCharacter::Spacelike) {
        f.e2 = {0.0, -sh, ch};
        f.e3 = {0.0, -ch, sh};
        f.epsilon = -1;
    } else {
        f.e2 = {0.0, ch, sh};
        f.e3 = {0.0, sh, ch};
        f.epsilon = 1;
    }
    return f;
}

} // namespace

NaturalEquations family_to_natural(const FamilySpec& spec) {
    if (!(spec.s_lo < spec.s_hi) || !std::isfinite(spec.s_lo) || !std::isfinite(spec.s_hi))
        raise(Errc::InvalidArgument, "family_to_natural: empty or non-finite domain");

    NaturalEquations neq;
    neq.character = spec.character;
    neq.s_lo = spec.s_lo;
    neq.s_hi = spec.s_hi;

    switch (spec.family) {
    case CurveFamily::GeneralHelix: {
        if (std::abs(spec.m) <= 1e-12)
            raise(Errc::InvalidFamilyParameter, "general helix: slope m must be nonzero");
        if (!spec.kappa_fn)
            raise(Errc::InvalidFamilyParameter, "general helix: kappa function is required");
        const double m = spec.m;
        const auto kappa = spec.kappa_fn;
        neq.kappa = kappa;
        neq.tau = [m, kappa](double s) { return m * kappa(s); };
        break;
    }
    case CurveFamily::CircularHelix: {
        if (!(spec.kappa0 > 0.0))
            raise(Errc::InvalidFamilyParameter, "circular helix: kappa0 must be positive");
        const double k0 = spec.kappa0, t0 = spec.tau0;
        neq.kappa = [k0](double) { return k0; };
        neq.tau = [t0](double) { return t0; };
        break;
    }
    case CurveFamily::Salkowski: {
        if (!(spec.kappa0 > 0.0))
            raise(Errc::InvalidFamilyParameter, "salkowski: kappa0 must be positive");
        if (!spec.tau_fn)
            raise(Errc::InvalidFamilyParameter, "salkowski: tau function is required");
        const double k0 = spec.kappa0;
        neq.kappa = [k0](double) { return k0; };
        neq.tau = spec.tau_fn;
        break;
    }
    case CurveFamily::AntiSalkowski: {
        if (!spec.kappa_fn)
            raise(Errc::InvalidFamilyParameter, "anti-salkowski: kappa function is required");
        const double t0 = spec.tau0;
        neq.kappa = spec.kappa_fn;
        neq.tau = [t0](double) { return t0; };
        break;
    }
    }
    return neq;
}

struct CurveSynthesizer::State {
    NaturalEquations neq;
    QuadratureConfig cfg;
    std::vector<double> grid;
    std::vector<double> dense;
    std::optional<SampledInterpolant> T, Is, Ic, Y, Z;

    double yprime(double s) const {
        return neq.character == CausalCharacter::Spacelike ? -Is->value(s) : Ic->value(s);
    }
    double zprime(double s) const {
        return neq.character == CausalCharacter::Spacelike ? Ic->value(s) : Is->value(s);
    }
    void require_in_domain(double s, const char* who) const {
        const double slack = 1e-12 * std::max({1.0, std::abs(neq.s_lo), std::abs(neq.s_hi)});
        if (!std::isfinite(s) || s < neq.s_lo - slack || s > neq.s_hi + slack)
            raise(Errc::OutOfDomain,
                  std::string(who) + ": s = " + std::to_string(s) + " outside the domain");
    }
};

CurveSynthesizer::CurveSynthesizer(NaturalEquations neq,
                                   std::span<const double> grid,
                                   const QuadratureConfig& cfg) {
    validate_equations(neq, "synthesize");
    if (grid.size() < 2)
        raise(Errc::InvalidArgument, "synthesize: need at least 2 grid nodes");
    const double slack = 1e-12 * std::max({1.0, std::abs(neq.s_lo), std::abs(neq.s_hi)});
    double min_cell = neq.s_hi - neq.s_lo;
    for (size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) {
            if (!(grid[i] > grid[i - 1]))
                raise(Errc::InvalidArgument, "synthesize: grid must be strictly increasing");
            min_cell = std::min(min_cell, grid[i] - grid[i - 1]);
        }
        if (grid[i] < neq.s_lo - slack || grid[i] > neq.s_hi + slack)
            raise(Errc::InvalidArgument, "synthesize: grid node outside the domain");
    }

    auto state = std::make_shared<State>();
    state->neq = std::move(neq);
    state->cfg = cfg;
    state->grid.assign(grid.begin(), grid.end());

    // Internal dense grid: uniform over the whole domain, at least 4x finer
    // than the tightest output cell and never below base_grid cells.
    const double length = state->neq.s_lo < state->neq.s_hi
        ? state->neq.s_hi - state->neq.s_lo : 0.0;
    long cells = std::max<long>(std::max(4, cfg.base_grid),
                                std::lround(std::ceil(4.0 * length / min_cell)));
    if (cells > (1L << 18))
        raise(Errc::InvalidArgument, "synthesize: output grid too fine for the synthesis tables");
    state->dense.resize(static_cast<size_t>(cells) + 1);
    for (long i = 0; i <= cells; ++i)
        state->dense[static_cast<size_t>(i)] = state->neq.s_lo +
            length * static_cast<double>(i) / static_cast<double>(cells);
    state->dense.back() = state->neq.s_hi;

    for (double s : state->dense)
        checked_kappa(state->neq, s, "synthesize");

    // Torsion integral T, then the antiderivative pair (Is, Ic), then the
    // coordinates; each level integrates a cubic interpolant of the previous
    // one.
    const auto tau = state->neq.tau;
    std::vector<double> t_tab = cumulative_integral(tau, state->neq.s_lo, state->dense, cfg);
    state->T.emplace(state->dense, std::move(t_tab), 3, 1);

    const auto kappa = state->neq.kappa;
    const auto& T = *state->T;
    const auto gs = [&T, kappa](double s) { return std::sinh(T.value(s)) * kappa(s); };
    const auto gc = [&T, kappa](double s) { return std::cosh(T.value(s)) * kappa(s); };
    std::vector<double> is_tab = cumulative_integral(gs, state->neq.s_lo, state->dense, cfg);
    std::vector<double> ic_tab = cumulative_integral(gc, state->neq.s_lo, state->dense, cfg);
    state->Is.emplace(state->dense, std::move(is_tab), 3, 1);
    state->Ic.emplace(state->dense, std::move(ic_tab), 3, 1);

    const State* st = state.get();
    std::vector<double> y_tab = cumulative_integral(
        [st](double s) { return st->yprime(s); }, st->neq.s_lo, st->dense, cfg);
    std::vector<double> z_tab = cumulative_integral(
        [st](double s) { return st->zprime(s); }, st->neq.s_lo, st->dense, cfg);
    state->Y.emplace(state->dense, std::move(y_tab), 3, 1);
    state->Z.emplace(state->dense, std::move(z_tab), 3, 1);

    state_ = std::move(state);
}

const NaturalEquations& CurveSynthesizer::equations() const { return state_->neq; }

Vec3 CurveSynthesizer::position(double s) const {
    state_->require_in_domain(s, "position");
    return {s, state_->Y->value(s), state_->Z->value(s)};
}

double CurveSynthesizer::torsion_integral(double s) const {
    state_->require_in_domain(s, "torsion_integral");
    return state_->T->value(s);
}

Frame CurveSynthesizer::frame(double s) const {
    state_->require_in_domain(s, "frame");
    const double kappa = checked_kappa(state_->neq, s, "frame");
    const double tau = checked_tau(state_->neq, s, "frame");
    return assemble_frame(state_->neq.character, state_->T->value(s),
                          state_->yprime(s), state_->zprime(s), kappa, tau);
}

SampledCurve CurveSynthesizer::sample(bool with_frames) const {
    SampledCurve out;
    out.params = state_->grid;
    out.points.reserve(out.params.size());
    for (double s : out.params)
        out.points.push_back(position(s));
    if (with_frames) {
        out.frames.reserve(out.params.size());
        for (double s : out.params)
            out.frames.push_back(frame(s));
    }
    return out;
}

CurveModel CurveSynthesizer::curve_model() const {
    const auto st = state_;
    CurveModel model;
    model.s_lo = st->neq.s_lo;
    model.s_hi = st->neq.s_hi;
    model.kind = Parametrization::ArcLength;
    model.position = [st](double s) {
        st->require_in_domain(s, "position");
        return Vec3{s, st->Y->value(s), st->Z->value(s)};
    };
    model.derivative[0] = [st](double s) {
        return Vec3{1.0, st->yprime(s), st->zprime(s)};
    };
    // r'' = kappa e2 and r''' = kappa' e2 + kappa tau e3, written out through
    // T(s); kappa' falls back to a central difference of the input map.
    model.derivative[1] = [st](double s) {
        const double k = checked_kappa(st->neq, s, "derivative");
        const double T = st->T->value(s);
        if (st->neq.character == CausalCharacter::Spacelike)
            return Vec3{0.0, -k * std::sinh(T), k * std::cosh(T)};
        return Vec3{0.0, k * std::cosh(T), k * std::sinh(T)};
    };
    model.derivative[2] = [st](double s) {
        const double k = checked_kappa(st->neq, s, "derivative");
        const double t = checked_tau(st->neq, s, "derivative");
        const double kp = scalar_derivative(st->neq.kappa, s);
        const double T = st->T->value(s);
        const double sh = std::sinh(T), ch = std::cosh(T);
        if (st->neq.character == CausalCharacter::Spacelike)
            return Vec3{0.0, -kp * sh - k * t * ch, kp * ch + k * t * sh};
        return Vec3{0.0, kp * ch + k * t * sh, kp * sh + k * t * ch};
    };
    return model;
}

SampledCurve synthesize(const NaturalEquations& neq,
                        std::span<const double> grid,
                        const QuadratureConfig& cfg) {
    return CurveSynthesizer(neq, grid, cfg).sample(true);
}

Frame closed_form_frame(const NaturalEquations& neq, double s,
                        const QuadratureConfig& cfg) {
    validate_equations(neq, "closed_form_frame");
    const double slack = 1e-12 * std::max({1.0, std::abs(neq.s_lo), std::abs(neq.s_hi)});
    if (!std::isfinite(s) || s < neq.s_lo - slack || s > neq.s_hi + slack)
        raise(Errc::OutOfDomain, "closed_form_frame: s outside the domain");

    const double kappa = checked_kappa(neq, s, "closed_form_frame");
    const double tau_s = checked_tau(neq, s, "closed_form_frame");

    // Direct nested adaptive quadrature, no tables: T(sigma) is re-integrated
    // from scratch inside the antiderivative integrands.
    const double lo = neq.s_lo;
    const double inner_tol = 0.25 * cfg.abs_tol;
    const auto tau = neq.tau;
    const auto T_at = [&](double sigma) {
        return integrate(tau, lo, sigma, inner_tol, cfg.max_refinement_depth);
    };
    const auto k = neq.kappa;
    const double Is = integrate([&](double sig) { return std::sinh(T_at(sig)) * k(sig); },
                                lo, s, cfg.abs_tol, cfg.max_refinement_depth);
    const double Ic = integrate([&](double sig) { return std::cosh(T_at(sig)) * k(sig); },
                                lo, s, cfg.abs_tol, cfg.max_refinement_depth);
    const double e1y = neq.character == CausalCharacter::Spacelike ? -Is : Ic;
    const double e1z = neq.character == CausalCharacter::Spacelike ? Ic : Is;
    return assemble_frame(neq.character, T_at(s), e1y, e1z, kappa, tau_s);
}

CurveModel sampled_interpolant(const SampledCurve& samples) {
    if (samples.params.size() != samples.points.size())
        raise(Errc::InvalidArgument, "sampled_interpolant: parameter/point count mismatch");
    if (samples.params.size() < 8)
        raise(Errc::InvalidArgument, "sampled_interpolant: need at least 8 samples");
    for (size_t i = 0; i + 1 < samples.params.size(); ++i)
        if (!(samples.params[i + 1] > samples.params[i]))
            raise(Errc::InvalidArgument, "sampled_interpolant: parameters must be strictly increasing");

    std::vector<double> ys(samples.points.size()), zs(samples.points.size());
    for (size_t i = 0; i < samples.points.size(); ++i) {
        if (std::abs(samples.points[i].x - samples.params[i]) > 1e-9)
            raise(Errc::InvalidArgument, "sampled_interpolant: samples are not in arc-length form");
        ys[i] = samples.points[i].y;
        zs[i] = samples.points[i].z;
    }

    const auto py = std::make_shared<SampledInterpolant>(samples.params, std::move(ys), 7);
    const auto pz = std::make_shared<SampledInterpolant>(samples.params, std::move(zs), 7);

    CurveModel model;
    model.s_lo = samples.params.front();
    model.s_hi = samples.params.back();
    model.kind = Parametrization::ArcLength;
    model.position = [py, pz](double s) { return Vec3{s, py->value(s), pz->value(s)}; };
    model.derivative[0] = [py, pz](double s) {
        return Vec3{1.0, py->derivative(s, 1), pz->derivative(s, 1)};
    };
    model.derivative[1] = [py, pz](double s) {
        return Vec3{0.0, py->derivative(s, 2), pz->derivative(s, 2)};
    };
    model.derivative[2] = [py, pz](double s) {
        return Vec3{0.0, py->derivative(s, 3), pz->derivative(s, 3)};
    };
    return model;
}

} // namespace pg
