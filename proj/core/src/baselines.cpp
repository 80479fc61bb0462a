// SPDX-License-Identifier: Apache-2.0
//
// rasec: secrecy-rate optimization for rotatable-antenna MIMO wiretap channels
// Copyright (C) 2026 the rasec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rasec/baselines.hpp"

#include <cmath>
#include <numbers>

#include "rasec/rng.hpp"

namespace rasec {

namespace {

// RFOA / FOA convention: frozen boresights sit on the local panel normal.
arma::mat boresights_on_axis(int count) {
    arma::mat out(3, count, arma::fill::zeros);
    out.row(2).ones();
    return out;
}

arma::mat random_cap_orientations(CounterRng& rng, const Cap& cap, int count) {
    arma::mat out(3, count);
    for (int i = 0; i < count; ++i) {
        const double u1 = rng.next_unit();
        const double u2 = rng.next_unit();
        out.col(i) = cap_point_from_uniforms(cap, u1, u2);
    }
    return out;
}

arma::mat quantized(const arma::mat& orientations, const arma::mat& codebook) {
    arma::mat out(arma::size(orientations));
    for (arma::uword i = 0; i < orientations.n_cols; ++i) {
        out.col(i) = nearest_codeword(codebook, Vec3(orientations.col(i)));
    }
    return out;
}

BaselineResult from_ao(const AoResult& r) {
    return {r.secrecy_bits, r.surrogate_nats, r.iterations, r.converged};
}

BaselineResult from_multicast(const MulticastAoResult& r) {
    return {r.secrecy_bits, r.lower_bound_nats, r.iterations, r.converged};
}

BaselineResult run_single(Baseline b, const Scenario& sc, const TraceSink& sink) {
    const ChannelModel& link = sc.links[0];
    const double p_max = sc.p_max_w();
    const int d = sc.cfg.streams;
    const SolverConfig& cfg = sc.cfg.solver;

    switch (b) {
        case Baseline::kProposed:
            return from_ao(run_ao(link, sc.cap, p_max, d, sc.init_tx, sc.init_rx[0], cfg,
                                  OrientMode::kJoint, sink));
        case Baseline::kRfoa:
            return from_ao(run_ao(link, sc.cap, p_max, d, sc.init_tx,
                                  boresights_on_axis(sc.n_rx()), cfg, OrientMode::kTransmitOnly,
                                  sink));
        case Baseline::kFoa:
            return from_ao(run_ao(link, sc.cap, p_max, d, boresights_on_axis(sc.n_tx()),
                                  boresights_on_axis(sc.n_rx()), cfg, OrientMode::kFrozen, sink));
        case Baseline::kIsotropic: {
            const Scenario iso = sc.with_directivity(0.0);
            return from_ao(run_ao(iso.links[0], iso.cap, p_max, d, iso.init_tx, iso.init_rx[0],
                                  cfg, OrientMode::kFrozen, sink));
        }
        case Baseline::kRandomOrient: {
            CounterRng rng(sc.cfg.seed, Stream::kRandomBaseline);
            const arma::mat ft = random_cap_orientations(rng, sc.cap, sc.n_tx());
            const arma::mat fr = random_cap_orientations(rng, sc.cap, sc.n_rx());
            return from_ao(run_ao(link, sc.cap, p_max, d, ft, fr, cfg, OrientMode::kFrozen, sink));
        }
        case Baseline::kDiscrete: {
            const AoResult opt = run_ao(link, sc.cap, p_max, d, sc.init_tx, sc.init_rx[0], cfg,
                                        OrientMode::kJoint);
            const arma::mat codebook = fibonacci_codebook(sc.cap, 32);
            const arma::mat ft_q = quantized(opt.ft, codebook);
            const arma::mat fr_q = quantized(opt.fr, codebook);
            AoResult re = run_ao(link, sc.cap, p_max, d, ft_q, fr_q, cfg, OrientMode::kFrozen,
                                 sink);
            re.iterations += opt.iterations;
            return from_ao(re);
        }
    }
    throw std::invalid_argument("run_baseline: unknown baseline");
}

BaselineResult run_multi(Baseline b, const Scenario& sc, const TraceSink& sink) {
    const SolverConfig& cfg = sc.cfg.solver;
    MulticastTraceSink msink;
    if (sink) {
        msink = [&sink](const MulticastTraceRecord& rec) {
            sink(TraceRecord{rec.iteration, rec.lower_bound_nats, rec.secrecy_bits, 0.0});
        };
    }

    auto fixed_rx = [&sc]() {
        return std::vector<arma::mat>(sc.receivers(), boresights_on_axis(sc.n_rx()));
    };

    switch (b) {
        case Baseline::kProposed:
            return from_multicast(run_ao_multicast(sc, cfg, msink));
        case Baseline::kRfoa: {
            const auto fr = fixed_rx();
            return from_multicast(
                run_ao_multicast(sc, cfg, msink, OrientMode::kTransmitOnly, nullptr, &fr));
        }
        case Baseline::kFoa: {
            const arma::mat ft = boresights_on_axis(sc.n_tx());
            const auto fr = fixed_rx();
            return from_multicast(
                run_ao_multicast(sc, cfg, msink, OrientMode::kFrozen, &ft, &fr));
        }
        case Baseline::kIsotropic: {
            const Scenario iso = sc.with_directivity(0.0);
            return from_multicast(run_ao_multicast(iso, cfg, msink, OrientMode::kFrozen));
        }
        case Baseline::kRandomOrient: {
            CounterRng rng(sc.cfg.seed, Stream::kRandomBaseline);
            const arma::mat ft = random_cap_orientations(rng, sc.cap, sc.n_tx());
            std::vector<arma::mat> fr;
            for (int k = 0; k < sc.receivers(); ++k) {
                fr.push_back(random_cap_orientations(rng, sc.cap, sc.n_rx()));
            }
            return from_multicast(
                run_ao_multicast(sc, cfg, msink, OrientMode::kFrozen, &ft, &fr));
        }
        case Baseline::kDiscrete: {
            const MulticastAoResult opt = run_ao_multicast(sc, cfg);
            const arma::mat codebook = fibonacci_codebook(sc.cap, 32);
            const arma::mat ft_q = quantized(opt.ft, codebook);
            std::vector<arma::mat> fr_q;
            for (const auto& fr : opt.fr) fr_q.push_back(quantized(fr, codebook));
            MulticastAoResult re =
                run_ao_multicast(sc, cfg, msink, OrientMode::kFrozen, &ft_q, &fr_q);
            re.iterations += opt.iterations;
            return from_multicast(re);
        }
    }
    throw std::invalid_argument("run_baseline: unknown baseline");
}

}  // namespace

Baseline baseline_from_name(const std::string& name) {
    if (name == "proposed") return Baseline::kProposed;
    if (name == "rfoa") return Baseline::kRfoa;
    if (name == "foa") return Baseline::kFoa;
    if (name == "isotropic") return Baseline::kIsotropic;
    if (name == "random") return Baseline::kRandomOrient;
    if (name == "discrete") return Baseline::kDiscrete;
    throw std::invalid_argument("unknown baseline: " + name);
}

std::string baseline_name(Baseline b) {
    switch (b) {
        case Baseline::kProposed: return "proposed";
        case Baseline::kRfoa: return "rfoa";
        case Baseline::kFoa: return "foa";
        case Baseline::kIsotropic: return "isotropic";
        case Baseline::kRandomOrient: return "random";
        case Baseline::kDiscrete: return "discrete";
    }
    return "unknown";
}

BaselineResult run_baseline(Baseline b, const Scenario& sc, const TraceSink& sink) {
    return sc.receivers() == 1 ? run_single(b, sc, sink) : run_multi(b, sc, sink);
}

arma::mat fibonacci_codebook(const Cap& cap, int n_samples) {
    if (n_samples < 1) throw std::invalid_argument("fibonacci_codebook: need at least one sample");
    const double golden = 0.5 * (1.0 + std::sqrt(5.0));
    arma::mat out(3, n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double frac_arg = static_cast<double>(i) / (golden * golden);
        const double frac = frac_arg - std::floor(frac_arg);
        const double cos_theta =
            1.0 - (i + 0.5) / static_cast<double>(n_samples) * (1.0 - cap.cos_z);
        const double theta = std::acos(std::clamp(cos_theta, -1.0, 1.0));
        const double phi = 2.0 * std::numbers::pi * frac;
        out.col(i) = Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                          std::cos(theta)};
    }
    return out;
}

Vec3 nearest_codeword(const arma::mat& codebook, const Vec3& f) {
    arma::uword best = 0;
    double best_dot = -2.0;
    for (arma::uword i = 0; i < codebook.n_cols; ++i) {
        const double d = arma::dot(codebook.col(i), f);
        if (d > best_dot) {
            best_dot = d;
            best = i;
        }
    }
    return Vec3(codebook.col(best));
}

}  // namespace rasec
