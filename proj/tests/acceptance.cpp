// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "laserep/cross_sections.hpp"
#include "laserep/oracle.hpp"

using namespace laserep;

namespace
{
auto const& prof = ConstantsProfile::paper();

struct Outcome
{
    bool pass{true};
    std::vector<std::string> details;

    void check(bool ok, std::string const& what)
    {
        pass = pass && ok;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
};

std::string fmt(char const* pattern, double a, double b = 0, double c = 0, double d = 0)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c, d);
    return buf;
}

double rel(double value, double reference)
{
    return std::abs(value / reference - 1);
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

LaserField laser_at(double v_per_cm, double ev = 1.17)
{
    return build_laser(field_to_au(v_per_cm, prof), photon_energy_to_au(ev, prof), prof);
}

DcsRequest request(Regime regime, double t_ev, ScatteringGeometry g)
{
    DcsRequest r;
    r.regime = regime;
    r.profile = prof;
    r.kinetic = energy_to_au(t_ev, prof);
    r.geometry = g;
    return r;
}

ScatteringGeometry const reference_geometry = ScatteringGeometry::from_degrees(15, 15, 0, 105);
ScatteringGeometry const proton_geometry = ScatteringGeometry::from_degrees(60, 0, 1, 90);
ScatteringGeometry const transverse_geometry = ScatteringGeometry::from_degrees(0, 0, 90, 0);

DcsRequest dressed(double t_ev, double field, ScatteringGeometry g = reference_geometry)
{
    DcsRequest r = request(Regime::ElectronDressed, t_ev, g);
    r.laser = laser_at(field);
    return r;
}

struct Reference
{
    int s;
    double dcs;
};

// Checks listed partials and reports the worst relative deviation
void check_partials(Outcome& o,
                    DcsRequest const& r,
                    std::vector<Reference> const& refs,
                    double tolerance)
{
    double worst = 0;
    int worst_s = 0;
    for (auto const& ref : refs)
    {
        double const v = dcs_partial(r, ref.s);
        double const d = rel(v, ref.dcs);
        o.check(d <= tolerance, fmt("s=%+.0f  %.6g vs %.6g  (dev %.2f%%)", ref.s, v, ref.dcs, 100 * d));
        if (d > worst)
        {
            worst = d;
            worst_s = ref.s;
        }
    }
    o.details.push_back(fmt("     worst deviation %.2f%% at s=%+.0f (limit %.0f%%)", 100 * worst, worst_s,
                            100 * tolerance));
}

void check_vanishing(Outcome& o, DcsRequest const& r, int s)
{
    for (int sign : {-1, 1})
    {
        double const v = dcs_partial(r, sign * s);
        o.check(v < 1e-12, fmt("s=%+.0f  %.3g < 1e-12", sign * s, v));
    }
}

void check_runtime(Outcome& o, double elapsed, double budget)
{
    o.check(elapsed < budget, fmt("runtime %.2f s < %.0f s", elapsed, budget));
}

//---------------------------------------------------------------------------//
Outcome laser_free_goldens()
{
    Outcome o;
    for (auto [t, ref] : {std::pair{2.7e3, 2.61973}, std::pair{0.511e6, 1.27435e-4}})
    {
        auto const t0 = std::chrono::steady_clock::now();
        double const v = dcs_laser_free(request(Regime::LaserFree, t, reference_geometry)).total;
        double const el = seconds_since(t0);
        o.check(rel(v, ref) <= 5e-3,
                fmt("T1=%.4g eV  %.6g vs %.6g  (dev %.3f%%)", t, v, ref, 100 * rel(v, ref)));
        check_runtime(o, el, 1);
    }
    return o;
}

Outcome first_column_partials()
{
    Outcome o;
    auto const t0 = std::chrono::steady_clock::now();
    DcsRequest const r = dressed(2.7e3, 1e7);
    check_partials(o, r,
                   {{-8, 9.53968e-5}, {-6, 1.08317e-2}, {-4, 2.60332e-1}, {-2, 2.35595e-1},
                    {0, 3.6098e-1}, {2, 2.35433e-1}, {4, 2.59972e-1}, {6, 1.08093e-2}, {8, 9.53968e-5}},
                   0.02);
    check_vanishing(o, r, 10);
    check_runtime(o, seconds_since(t0), 10);
    return o;
}

Outcome second_column_partials()
{
    Outcome o;
    auto const t0 = std::chrono::steady_clock::now();
    DcsRequest const r = dressed(2.7e3, 5.14225e7);
    check_partials(o, r,
                   {{0, 0.0224972}, {-10, 0.00463691}, {10, 0.00462091}, {-20, 0.150387},
                    {20, 0.149351}},
                   0.03);
    check_vanishing(o, r, 100);
    check_runtime(o, seconds_since(t0), 30);
    return o;
}

Outcome sum_rule()
{
    Outcome o;
    DcsRequest r = dressed(2.7e3, 1e7);
    r.s_range = ChannelRange{-10, 10};
    double const summed = dcs_summed(r).total;
    double const free = dcs_laser_free(r).total;
    o.check(rel(summed, free) < 0.01, fmt("sum over |s|<=10 %.8g vs laser-free %.8g  (gap %.3g)", summed, free,
                                          rel(summed, free)));
    return o;
}

Outcome cutoff_detection()
{
    Outcome o;
    for (auto [field, expected, slack] : {std::tuple{1e7, 10, 2}, std::tuple{5.14225e7, 100, 10}})
    {
        DcsResult const res = dcs_summed(dressed(2.7e3, field));
        bool const ok = std::abs(res.cutoff_positive - expected) <= slack
                        && std::abs(-res.cutoff_negative - expected) <= slack;
        o.check(ok, fmt("E0=%.6g V/cm  cutoff %+.0f/%+.0f, expected +-%.0f", field, res.cutoff_negative,
                        res.cutoff_positive, expected)
                        + fmt(" (+-%.0f), z=%.4g", slack, res.diagnostics.z));
    }
    return o;
}

Outcome channel_symmetry()
{
    Outcome o;
    DcsRequest const r = dressed(2.7e3, 1e7);
    double worst = 0;
    for (int s = 1; s <= 8; ++s)
    {
        double const a = dcs_partial(r, s);
        double const b = dcs_partial(r, -s);
        worst = std::max(worst, std::abs(a - b) / a);
    }
    o.check(worst <= 0.01, fmt("max |d(s)-d(-s)|/d(s) over |s|<=8: %.3g", worst));
    return o;
}

Outcome proton_dressing()
{
    Outcome o;
    auto const t0 = std::chrono::steady_clock::now();
    struct Row
    {
        double field;
        double electron;
        double fully;
    };
    std::vector<Row> const refs = {{1e7, 0.00350813, 0.00350813},
                                   {1e8, 0.000335896, 0.000335896},
                                   {1e9, 0.0000440559, 0.0000440559}};
    auto eval = [](double field, Regime regime) {
        DcsRequest r = request(regime, 2.7e3, proton_geometry);
        r.laser = laser_at(field);
        r.s_range = ChannelRange{-5, 5};
        r.l_range = ChannelRange{-5, 5};
        return evaluate(r).total;
    };
    for (auto const& ref : refs)
    {
        double const ed = eval(ref.field, Regime::ElectronDressed);
        double const fd = eval(ref.field, Regime::FullyDressed);
        o.check(rel(ed, ref.electron) <= 0.03,
                fmt("E0=%.0e  electron-dressed %.6g vs %.6g (dev %.2f%%)", ref.field, ed, ref.electron,
                    100 * rel(ed, ref.electron)));
        o.check(rel(fd, ref.fully) <= 0.03,
                fmt("E0=%.0e  fully dressed   %.6g vs %.6g (dev %.2f%%)", ref.field, fd, ref.fully,
                    100 * rel(fd, ref.fully)));
        double const mutual = std::abs(ed - fd) / std::max(ed, fd);
        o.check(mutual < 5e-7, fmt("E0=%.0e  mutual difference %.3g < 5e-7", ref.field, mutual));
    }
    double const ed10 = eval(1e10, Regime::ElectronDressed);
    double const fd10 = eval(1e10, Regime::FullyDressed);
    double const ratio = ed10 / fd10;
    o.check(ratio >= 5 && ratio <= 7,
            fmt("E0=1e10  electron/fully ratio %.4g in [5, 7] (%.4g / %.4g)", ratio, ed10, fd10));

    // Qualitative rows: monotone decrease, Mott below e-P
    std::vector<double> const fields = {1e7, 1e8, 1e9, 1e10, 1e12, 1e13, 1e14};
    for (Regime regime : {Regime::ElectronDressed, Regime::FullyDressed})
    {
        bool monotone = true;
        double prev = INFINITY;
        for (double f : fields)
        {
            double const v = eval(f, regime);
            monotone = monotone && v < prev;
            prev = v;
        }
        o.check(monotone, std::string(to_string(regime)) + " decreases over 1e7..1e14 V/cm");
    }
    for (double f : {1e7, 1e8, 1e9})
    {
        double const mott = eval(f, Regime::MottLimit);
        double const ep = eval(f, Regime::ElectronDressed);
        o.check(mott < ep, fmt("E0=%.0e  Mott(Z=1) %.4g below e-P %.4g", f, mott, ep));
    }
    check_runtime(o, seconds_since(t0), 300);
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    auto const t0 = std::chrono::steady_clock::now();
    OracleReport const rep = run_oracle(42, 100, prof);
    o.check(rep.max_amplitude_deviation < 1e-9,
            fmt("amplitude deviation %.3g < 1e-9 over %.0f points", rep.max_amplitude_deviation, rep.points));
    o.check(rep.max_coefficient_deviation < 1e-9,
            fmt("per-coefficient deviation %.3g < 1e-9", rep.max_coefficient_deviation));
    check_runtime(o, seconds_since(t0), 60);
    return o;
}

Outcome zero_field_identity()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0, 1);
    double worst = 0;
    int n = 0;
    while (n < 20)
    {
        double const t = 1e3 * std::pow(1e3, u(rng));
        ScatteringGeometry const g{0.1 + 2.9 * u(rng), 6.28 * u(rng), 0.1 + 2.9 * u(rng), 6.28 * u(rng)};
        if (geometry_factor(g) > std::cos(5 * 3.14159265358979 / 180))
            continue;
        ++n;
        DcsRequest r = request(Regime::LaserFree, t, g);
        double const free = dcs_laser_free(r).total;
        r.laser = laser_at(0);
        r.s_range = ChannelRange{0, 0};
        r.l_range = ChannelRange{0, 0};
        for (Regime regime : {Regime::ElectronDressed, Regime::FullyDressed})
        {
            r.regime = regime;
            worst = std::max(worst, rel(evaluate(r).total, free));
        }
    }
    o.check(worst < 1e-12, fmt("max relative difference %.3g < 1e-12 over %.0f points", worst, n));
    return o;
}

Outcome mott_crossing()
{
    Outcome o;
    double peak_ep = 0;
    double peak_mott = 0;
    double at_ep = 0;
    for (int i = -180; i <= 180; ++i)
    {
        double const theta = 0.5 * i;
        ScatteringGeometry const g = ScatteringGeometry::from_degrees(15, 15, theta, 105);
        DcsRequest r = request(Regime::LaserFree, 0.511e6, g);
        double const ep = dcs_laser_free(r).total;
        if (ep > peak_ep)
        {
            peak_ep = ep;
            at_ep = theta;
        }
        r.regime = Regime::MottLimit;
        r.z_charge = 1;
        peak_mott = std::max(peak_mott, dcs_mott_limit(r).total);
    }
    double const z_cross = std::sqrt(peak_ep / peak_mott);
    o.check(z_cross >= 10 && z_cross <= 12,
            fmt("crossing Z = %.3f in [10, 12]  (e-P peak %.5g at theta_f=%.1f deg)", z_cross, peak_ep, at_ep));
    return o;
}

// First field where the DCS departs from its zero-field value by more than 1%
double departure_field(double photon_ev, double t_ev)
{
    DcsRequest r = request(Regime::ElectronDressed, t_ev, transverse_geometry);
    r.s_range = ChannelRange{-5, 5};
    double const free = dcs_laser_free(r).total;
    for (int i = 0; i <= 80; ++i)
    {
        double const field = std::pow(10.0, i / 10.0);
        r.laser = laser_at(field, photon_ev);
        if (rel(dcs_summed(r).total, free) > 0.01)
            return field;
    }
    return INFINITY;
}

Outcome trends()
{
    Outcome o;
    DcsRequest r = dressed(0.0511e6, 0, transverse_geometry);
    r.s_range = ChannelRange{-5, 5};
    double prev = INFINITY;
    bool monotone = true;
    std::string values;
    for (double field : {1e5, 1e6, 1e7, 1e8})
    {
        r.laser = laser_at(field);
        double const v = dcs_summed(r).total;
        monotone = monotone && v <= prev;
        prev = v;
        values += fmt(" %.4g", v);
    }
    o.check(monotone, "field suppression non-increasing over 1e5..1e8 V/cm:" + values);

    double const low = departure_field(0.117, 0.511e6);
    double const high = departure_field(1.17, 0.511e6);
    o.check(low * 10 <= high * (1 + 1e-12),
            fmt("departure field %.3g V/cm (0.117 eV) at least a decade below %.3g V/cm (1.17 eV)", low, high));
    return o;
}

Outcome third_column_sparse()
{
    Outcome o;
    auto const t0 = std::chrono::steady_clock::now();
    DcsRequest const r = dressed(0.511e6, 1e7);
    check_partials(o, r,
                   {{-200, 3.12079e-7}, {-100, 4.29275e-7}, {-50, 1.25848e-7}, {-20, 4.11216e-7},
                    {0, 9.43704e-8}, {20, 4.11234e-7}, {50, 1.25861e-7}, {100, 4.29368e-7},
                    {200, 3.12214e-7}},
                   0.05);
    check_vanishing(o, r, 300);
    check_runtime(o, seconds_since(t0), 900);
    return o;
}
}  // namespace

int main()
{
    struct Criterion
    {
        char const* id;
        char const* title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> const criteria = {
        {"1", "laser-free golden values", laser_free_goldens},
        {"2", "partials at 1e7 V/cm, 2.7 keV", first_column_partials},
        {"3", "partials at 5.14225e7 V/cm, 2.7 keV", second_column_partials},
        {"4", "sum rule over |s| <= 10", sum_rule},
        {"5", "automatic cutoff detection", cutoff_detection},
        {"6", "channel symmetry", channel_symmetry},
        {"7", "electron vs fully dressed totals", proton_dressing},
        {"8", "closed form vs gamma-trace oracle", oracle_equivalence},
        {"9", "zero-field identity", zero_field_identity},
        {"10", "Mott crossing in Z", mott_crossing},
        {"11", "field and frequency trends", trends},
        {"12", "sparse partials at 1e7 V/cm, 0.511 MeV", third_column_sparse},
    };

    int failed = 0;
    for (auto const& c : criteria)
    {
        auto const t0 = std::chrono::steady_clock::now();
        Outcome const o = c.run();
        double const el = seconds_since(t0);
        std::printf("[%s] criterion %-2s %-40s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, el);
        for (auto const& d : o.details)
            std::printf("         %s\n", d.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
