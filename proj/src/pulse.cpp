#include "repeaterlab/pulse.hpp"

#include <cmath>

namespace repeaterlab {

PulseEnvelope PulseEnvelope::gaussian(double center, double sigma_t) {
    if (!(sigma_t > 0.0))
        throw InvalidParameterError("gaussian pulse requires sigma_t > 0");
    PulseEnvelope p;
    p.kind_ = Kind::gaussian;
    p.center_ = center;
    p.sigma_ = sigma_t;
    return p;
}

PulseEnvelope PulseEnvelope::square(double center, double duration) {
    if (!(duration > 0.0))
        throw InvalidParameterError("square pulse requires duration > 0");
    PulseEnvelope p;
    p.kind_ = Kind::square;
    p.center_ = center;
    p.duration_ = duration;
    return p;
}

PulseEnvelope PulseEnvelope::sampled(double t_start, double dt,
                                     std::vector<std::complex<double>> samples) {
    if (!(dt > 0.0) || samples.size() < 2)
        throw InvalidParameterError("sampled pulse requires dt > 0 and at least 2 samples");
    double norm = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double w = (i == 0 || i + 1 == samples.size()) ? 0.5 : 1.0; // trapezoid
        norm += w * std::norm(samples[i]);
    }
    norm *= dt;
    if (!(norm > 0.0))
        throw InvalidParameterError("sampled pulse has zero energy");
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& s : samples) s *= scale;

    PulseEnvelope p;
    p.kind_ = Kind::sampled;
    p.t_start_ = t_start;
    p.dt_ = dt;
    p.samples_ = std::move(samples);
    p.center_ = t_start + 0.5 * dt * static_cast<double>(p.samples_.size() - 1);
    return p;
}

std::complex<double> PulseEnvelope::operator()(double t) const {
    switch (kind_) {
    case Kind::gaussian: {
        const double x = t - center_;
        const double amp = std::pow(2.0 * M_PI * sigma_ * sigma_, -0.25);
        return amp * std::exp(-x * x / (4.0 * sigma_ * sigma_));
    }
    case Kind::square: {
        const double half = 0.5 * duration_;
        if (t < center_ - half || t > center_ + half) return 0.0;
        return 1.0 / std::sqrt(duration_);
    }
    case Kind::sampled: {
        const double x = (t - t_start_) / dt_;
        if (x < 0.0 || x > static_cast<double>(samples_.size() - 1)) return 0.0;
        const auto i = static_cast<std::size_t>(x);
        if (i + 1 >= samples_.size()) return samples_.back();
        const double frac = x - static_cast<double>(i);
        return samples_[i] * (1.0 - frac) + samples_[i + 1] * frac;
    }
    }
    return 0.0;
}

void PulseEnvelope::support(double& t_lo, double& t_hi) const {
    switch (kind_) {
    case Kind::gaussian:
        t_lo = center_ - 8.0 * sigma_;
        t_hi = center_ + 8.0 * sigma_;
        return;
    case Kind::square:
        t_lo = center_ - 0.5 * duration_;
        t_hi = center_ + 0.5 * duration_;
        return;
    case Kind::sampled:
        t_lo = t_start_;
        t_hi = t_start_ + dt_ * static_cast<double>(samples_.size() - 1);
        return;
    }
}

} // namespace repeaterlab
