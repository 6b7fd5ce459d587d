#include "cohsim/propagator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "cohsim/errors.hpp"

namespace cohsim {

SplitStepPropagator::SplitStepPropagator(const Grid1D& grid,
                                         const Potential& potential, double dt)
    : grid_(grid),
      potential_(&potential),
      dt_(dt),
      nx_(grid.n),
      nbuf_(grid.periodic ? grid.n : 2 * grid.n),
      fft_(nbuf_),
      static_potential_(!potential.time_dependent()) {
  if (!(dt > 0.0)) throw ConfigError("propagator: dt must be positive");
  kin_phase_.resize(nbuf_);
  const double dk = 2.0 * std::numbers::pi / (nbuf_ * grid_.dx);
  for (int j = 0; j < nbuf_; ++j) {
    const int f = (j < (nbuf_ + 1) / 2) ? j : j - nbuf_;
    const double k = dk * f;
    kin_phase_[j] = std::exp(Complex(0.0, -0.5 * k * k * dt_));
  }
  half_phase_.resize(nbuf_);
  buf_.resize(nbuf_);
}

void SplitStepPropagator::refresh_phases(double t_mid) {
  potential_->sample(grid_, t_mid, vsamp_);
  auto phase_at = [&](double v) { return std::exp(Complex(0.0, -0.5 * dt_ * v)); };
  if (grid_.periodic) {
    for (int j = 0; j < nx_; ++j) half_phase_[j] = phase_at(vsamp_[j]);
  } else {
    // Even mirror of V about x_min; index 0 of the doubled domain is x_max.
    half_phase_[0] = phase_at((*potential_)(grid_.x_max, t_mid));
    for (int m = 1; m < nx_; ++m) half_phase_[m] = phase_at(vsamp_[nx_ - m]);
    for (int m = 0; m < nx_; ++m) half_phase_[nx_ + m] = phase_at(vsamp_[m]);
  }
  phases_ready_ = true;
  last_tmid_ = t_mid;
}

void SplitStepPropagator::step(std::vector<Complex>& psi, double t) {
  if (static_cast<int>(psi.size()) != nx_)
    throw ConfigError("propagator: state size does not match grid");
  const double t_mid = t + 0.5 * dt_;
  if (!phases_ready_ || (!static_potential_ && t_mid != last_tmid_))
    refresh_phases(t_mid);

  if (grid_.periodic) {
    for (int j = 0; j < nx_; ++j) buf_[j] = psi[j] * half_phase_[j];
  } else {
    // Odd continuation about x_min; assumes psi(x_min) ~ 0 (hard wall).
    buf_[0] = 0.0;
    for (int m = 1; m < nx_; ++m) buf_[m] = -psi[nx_ - m] * half_phase_[m];
    for (int m = 0; m < nx_; ++m) buf_[nx_ + m] = psi[m] * half_phase_[nx_ + m];
  }

  fft_.forward(buf_.data());
  const double scale = 1.0 / nbuf_;
  for (int j = 0; j < nbuf_; ++j) buf_[j] *= kin_phase_[j] * scale;
  fft_.backward(buf_.data());

  double norm2 = 0.0;
  if (grid_.periodic) {
    for (int j = 0; j < nx_; ++j) {
      psi[j] = buf_[j] * half_phase_[j];
      norm2 += std::norm(psi[j]);
    }
  } else {
    for (int m = 0; m < nx_; ++m) {
      psi[m] = buf_[nx_ + m] * half_phase_[nx_ + m];
      norm2 += std::norm(psi[m]);
    }
  }
  norm2 *= grid_.dx;

  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "propagation unstable at t=" << t + dt_ << ": |psi|^2=" << norm2
        << " (dt too large or potential mis-scaled)";
    throw NumericalError(msg.str());
  }
}

std::vector<Snapshot> split_step_evolve(const Orbital& phi,
                                        const PropagationPlan& plan,
                                        double t0) {
  if (!plan.potential) throw ConfigError("propagation plan has no potential");
  if (plan.record_every < 1)
    throw ConfigError("propagation plan: record_every must be >= 1");
  if (plan.n_steps < 0) throw ConfigError("propagation plan: negative step count");

  SplitStepPropagator prop(phi.grid, *plan.potential, plan.dt);
  std::vector<Snapshot> out;
  out.reserve(2 + plan.n_steps / plan.record_every);

  auto record = [&](double t, const std::vector<Complex>& v) {
    Orbital snap{phi.grid, v};
    const double n = snap.norm();
    if (std::abs(n - 1.0) > 1e-10)
      throw NumericalError("snapshot norm deviates beyond 1e-10");
    out.push_back({t, std::move(snap)});
  };

  std::vector<Complex> psi = phi.values;
  record(t0, psi);
  for (long s = 0; s < plan.n_steps; ++s) {
    prop.step(psi, t0 + s * plan.dt);
    if ((s + 1) % plan.record_every == 0) record(t0 + (s + 1) * plan.dt, psi);
  }
  return out;
}

}  // namespace cohsim
