#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

#include "spectral_chroma/errors.hpp"

// Dormand-Prince 8(5,3) explicit Runge-Kutta with Hairer's step-size control,
// for small fixed-size systems. Dense output is not needed here and omitted.

namespace spectral_chroma::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct Options {
    double rtol = 1e-13;
    double atol = 1e-15;
    double initial_step = 0.0;  // 0 picks a step from the initial slope
    std::size_t max_steps = 20'000'000;
};

struct Stats {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

namespace dop853 {
// Node coefficients.
inline constexpr double c2 = 0.526001519587677318785587544488e-01;
inline constexpr double c3 = 0.789002279381515978178381316732e-01;
inline constexpr double c4 = 0.118350341907227396726757197510e+00;
inline constexpr double c5 = 0.281649658092772603273242802490e+00;
inline constexpr double c6 = 0.333333333333333333333333333333e+00;
inline constexpr double c7 = 0.25e+00;
inline constexpr double c8 = 0.307692307692307692307692307692e+00;
inline constexpr double c9 = 0.651282051282051282051282051282e+00;
inline constexpr double c10 = 0.6e+00;
inline constexpr double c11 = 0.857142857142857142857142857142e+00;

inline constexpr double a21 = 5.26001519587677318785587544488e-2;
inline constexpr double a31 = 1.97250569845378994544595329183e-2;
inline constexpr double a32 = 5.91751709536136983633785987549e-2;
inline constexpr double a41 = 2.95875854768068491816892993775e-2;
inline constexpr double a43 = 8.87627564304205475450678981324e-2;
inline constexpr double a51 = 2.41365134159266685502369798665e-1;
inline constexpr double a53 = -8.84549479328286085344864962717e-1;
inline constexpr double a54 = 9.24834003261792003115737966543e-1;
inline constexpr double a61 = 3.7037037037037037037037037037e-2;
inline constexpr double a64 = 1.70828608729473871279604482173e-1;
inline constexpr double a65 = 1.25467687566822425016691814123e-1;
inline constexpr double a71 = 3.7109375e-2;
inline constexpr double a74 = 1.70252211019544039314978060272e-1;
inline constexpr double a75 = 6.02165389804559606850219397283e-2;
inline constexpr double a76 = -1.7578125e-2;
inline constexpr double a81 = 3.70920001185047927108779319836e-2;
inline constexpr double a84 = 1.70383925712239993810214054705e-1;
inline constexpr double a85 = 1.07262030446373284651809199168e-1;
inline constexpr double a86 = -1.53194377486244017527936158236e-2;
inline constexpr double a87 = 8.27378916381402288758473766002e-3;
inline constexpr double a91 = 6.24110958716075717114429577812e-1;
inline constexpr double a94 = -3.36089262944694129406857109825e0;
inline constexpr double a95 = -8.68219346841726006818189891453e-1;
inline constexpr double a96 = 2.75920996994467083049415600797e1;
inline constexpr double a97 = 2.01540675504778934086186788979e1;
inline constexpr double a98 = -4.34898841810699588477366255144e1;
inline constexpr double a101 = 4.77662536438264365890433908527e-1;
inline constexpr double a104 = -2.48811461997166764192642586468e0;
inline constexpr double a105 = -5.90290826836842996371446475743e-1;
inline constexpr double a106 = 2.12300514481811942347288949897e1;
inline constexpr double a107 = 1.52792336328824235832596922938e1;
inline constexpr double a108 = -3.32882109689848629194453265587e1;
inline constexpr double a109 = -2.03312017085086261358222928593e-2;
inline constexpr double a111 = -9.3714243008598732571704021658e-1;
inline constexpr double a114 = 5.18637242884406370830023853209e0;
inline constexpr double a115 = 1.09143734899672957818500254654e0;
inline constexpr double a116 = -8.14978701074692612513997267357e0;
inline constexpr double a117 = -1.85200656599969598641566180701e1;
inline constexpr double a118 = 2.27394870993505042818970056734e1;
inline constexpr double a119 = 2.49360555267965238987089396762e0;
inline constexpr double a1110 = -3.0467644718982195003823669022e0;
inline constexpr double a121 = 2.27331014751653820792359768449e0;
inline constexpr double a124 = -1.05344954667372501984066689879e1;
inline constexpr double a125 = -2.00087205822486249909675718444e0;
inline constexpr double a126 = -1.79589318631187989172765950534e1;
inline constexpr double a127 = 2.79488845294199600508499808837e1;
inline constexpr double a128 = -2.85899827713502369474065508674e0;
inline constexpr double a129 = -8.87285693353062954433549289258e0;
inline constexpr double a1210 = 1.23605671757943030647266201528e1;
inline constexpr double a1211 = 6.43392746015763530355970484046e-1;

// 8th order weights.
inline constexpr double b1 = 5.42937341165687622380535766363e-2;
inline constexpr double b6 = 4.45031289275240888144113950566e0;
inline constexpr double b7 = 1.89151789931450038304281599044e0;
inline constexpr double b8 = -5.8012039600105847814672114227e0;
inline constexpr double b9 = 3.1116436695781989440891606237e-1;
inline constexpr double b10 = -1.52160949662516078556178806805e-1;
inline constexpr double b11 = 2.01365400804030348374776537501e-1;
inline constexpr double b12 = 4.47106157277725905176885569043e-2;

// Embedded 3rd order error weights (relative to the 8th order solution).
inline constexpr double bhh1 = 0.244094488188976377952755905512e+00;
inline constexpr double bhh2 = 0.733846688281611857341361741547e+00;
inline constexpr double bhh3 = 0.220588235294117647058823529412e-01;

// Embedded 5th order error weights.
inline constexpr double er1 = 0.1312004499419488073250102996e-01;
inline constexpr double er6 = -0.1225156446376204440720569753e+01;
inline constexpr double er7 = -0.4957589496572501915214079952e+00;
inline constexpr double er8 = 0.1664377182454986536961530415e+01;
inline constexpr double er9 = -0.3503288487499736816886487290e+00;
inline constexpr double er10 = 0.3341791187130174790297318841e+00;
inline constexpr double er11 = 0.8192320648511571246570742613e-01;
inline constexpr double er12 = -0.2235530786388629525884427845e-01;
}  // namespace dop853

/// Integrates y' = rhs(t, y) from t0 to t1 > t0 and returns y(t1).
/// rhs is callable as State<N> rhs(double t, const State<N>& y).
template <std::size_t N, class Rhs>
State<N> integrate_dop853(Rhs&& rhs, double t0, State<N> y, double t1, const Options& opt = {},
                          Stats* stats = nullptr) {
    using namespace dop853;
    if (!(t1 > t0)) throw DomainError("integrate_dop853 requires t1 > t0");

    auto combine = [&](std::initializer_list<std::pair<double, const State<N>*>> terms, double h) {
        State<N> out = y;
        for (std::size_t i = 0; i < N; ++i) {
            double acc = 0.0;
            for (const auto& [coef, k] : terms) acc += coef * (*k)[i];
            out[i] += h * acc;
        }
        return out;
    };

    State<N> k1 = rhs(t0, y);
    double t = t0;
    double h = opt.initial_step;
    if (h <= 0.0) {
        double norm = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sc = opt.atol + opt.rtol * std::abs(y[i]);
            norm += (k1[i] / sc) * (k1[i] / sc);
        }
        norm = std::sqrt(norm / N);
        h = norm > 0.0 ? 0.01 * std::pow(norm, -1.0 / 8.0) * std::pow(opt.rtol, 1.0 / 8.0) : 1e-6;
        h = std::min(h, t1 - t0);
    }

    constexpr double safe = 0.9;
    constexpr double fac_min = 0.333;
    constexpr double fac_max = 6.0;
    bool last_rejected = false;
    std::size_t steps = 0;

    while (t < t1) {
        if (++steps > opt.max_steps)
            throw StepSizeUnderflow("dop853: step budget of " + std::to_string(opt.max_steps) +
                                    " exhausted at t = " + std::to_string(t));
        if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t)))
            throw StepSizeUnderflow("dop853: step size underflow at t = " + std::to_string(t));
        const bool final_step = t + h >= t1;
        if (final_step) h = t1 - t;

        const State<N> k2 = rhs(t + c2 * h, combine({{a21, &k1}}, h));
        const State<N> k3 = rhs(t + c3 * h, combine({{a31, &k1}, {a32, &k2}}, h));
        const State<N> k4 = rhs(t + c4 * h, combine({{a41, &k1}, {a43, &k3}}, h));
        const State<N> k5 = rhs(t + c5 * h, combine({{a51, &k1}, {a53, &k3}, {a54, &k4}}, h));
        const State<N> k6 = rhs(t + c6 * h, combine({{a61, &k1}, {a64, &k4}, {a65, &k5}}, h));
        const State<N> k7 =
            rhs(t + c7 * h, combine({{a71, &k1}, {a74, &k4}, {a75, &k5}, {a76, &k6}}, h));
        const State<N> k8 = rhs(
            t + c8 * h, combine({{a81, &k1}, {a84, &k4}, {a85, &k5}, {a86, &k6}, {a87, &k7}}, h));
        const State<N> k9 = rhs(t + c9 * h, combine({{a91, &k1}, {a94, &k4}, {a95, &k5}, {a96, &k6},
                                                     {a97, &k7}, {a98, &k8}},
                                                    h));
        const State<N> k10 =
            rhs(t + c10 * h, combine({{a101, &k1}, {a104, &k4}, {a105, &k5}, {a106, &k6},
                                      {a107, &k7}, {a108, &k8}, {a109, &k9}},
                                     h));
        const State<N> k11 =
            rhs(t + c11 * h, combine({{a111, &k1}, {a114, &k4}, {a115, &k5}, {a116, &k6},
                                      {a117, &k7}, {a118, &k8}, {a119, &k9}, {a1110, &k10}},
                                     h));
        const State<N> k12 =
            rhs(t + h, combine({{a121, &k1}, {a124, &k4}, {a125, &k5}, {a126, &k6}, {a127, &k7},
                                {a128, &k8}, {a129, &k9}, {a1210, &k10}, {a1211, &k11}},
                               h));

        State<N> slope;
        State<N> y_new;
        double err5 = 0.0;
        double err3 = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            slope[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] +
                       b10 * k10[i] + b11 * k11[i] + b12 * k12[i];
            y_new[i] = y[i] + h * slope[i];
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            const double e3 = slope[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i];
            const double e5 = er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] + er9 * k9[i] +
                              er10 * k10[i] + er11 * k11[i] + er12 * k12[i];
            err3 += (e3 / sc) * (e3 / sc);
            err5 += (e5 / sc) * (e5 / sc);
        }
        double denom = err5 + 0.01 * err3;
        if (denom <= 0.0) denom = 1.0;
        const double err = std::abs(h) * err5 * std::sqrt(1.0 / (N * denom));

        if (err <= 1.0) {
            const double fac = err == 0.0 ? fac_max
                                          : std::clamp(safe * std::pow(err, -1.0 / 8.0), fac_min, fac_max);
            t = final_step ? t1 : t + h;
            y = y_new;
            k1 = rhs(t, y);
            h *= last_rejected ? std::min(fac, 1.0) : fac;
            last_rejected = false;
            if (stats) ++stats->accepted;
        } else {
            h *= std::max(safe * std::pow(err, -1.0 / 8.0), fac_min);
            last_rejected = true;
            if (stats) ++stats->rejected;
        }
    }
    return y;
}

}  // namespace spectral_chroma::ode
