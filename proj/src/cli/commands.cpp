#include "commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "dbh/oracle.hpp"
#include "dbh/qcore.hpp"

namespace cliops {

void SweepConfig::validate() const {
    if (!(mass > 0.0)) throw std::domain_error("sweep config: mass must be positive");
    if (!(0.0 <= alpha_min && alpha_min < alpha_max && alpha_max < mass))
        throw std::domain_error("sweep config: need 0 <= alpha-min < alpha-max < mass");
    if (steps < 2) throw std::domain_error("sweep config: steps must be >= 2");
    if (!(omega > 0.0)) throw std::domain_error("sweep config: omega must be positive");
    if (std::abs(q_r) > 1.0) throw std::domain_error("sweep config: |qr| must be <= 1");
}

blackhole::DilatonParams SweepConfig::params_at(double alpha) const {
    blackhole::DilatonParams p;
    p.mass = mass;
    p.omega = omega;
    p.alpha = alpha;
    p.q_r = q_r;
    return p;
}

std::vector<SweepRow> run_sweep(const SweepConfig& c) {
    c.validate();
    std::vector<SweepRow> rows(static_cast<size_t>(c.steps));

    auto compute_row = [&](int i) {
        const double alpha = c.alpha_min + (c.alpha_max - c.alpha_min) * i / (c.steps - 1);
        const blackhole::DilatonParams p = c.params_at(alpha);
        SweepRow row;
        row.alpha = alpha;
        row.temperature = blackhole::hawking_temperature(p);
        row.sin_r = blackhole::squeeze_angle(p).sin_r;
        row.report = correlations::full_report(p);
        rows[static_cast<size_t>(i)] = row;
    };

    unsigned workers = std::thread::hardware_concurrency();
    workers = std::min(workers == 0 ? 1u : workers, 8u);
    if (workers <= 1 || c.steps < 4) {
        for (int i = 0; i < c.steps; ++i) compute_row(i);
        return rows;
    }

    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < c.steps; i = next.fetch_add(1)) compute_row(i);
        });
    for (std::thread& t : pool) t.join();
    return rows;
}

namespace {

std::string fmt12(double x) {
    if (x == 0.0) x = 0.0;  // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "alpha,temperature,sin_r,mutual_info,cc_A,cc_B,discord_A,discord_B,"
        "mid_classical,mid_quantum\n";
    for (const SweepRow& r : rows) {
        out += fmt12(r.alpha) + ',' + fmt12(r.temperature) + ',' + fmt12(r.sin_r) + ',' +
               fmt12(r.report.mutual_info) + ',' + fmt12(r.report.classical_a) + ',' +
               fmt12(r.report.classical_b) + ',' + fmt12(r.report.discord_a) + ',' +
               fmt12(r.report.discord_b) + ',' + fmt12(r.report.mid_classical) + ',' +
               fmt12(r.report.mid_quantum) + '\n';
    }
    return out;
}

double find_crossing(const SweepConfig& c) {
    c.validate();
    auto gap = [&](double alpha) {
        const qcore::DensityMatrix rho = blackhole::shared_state_direct(c.params_at(alpha));
        return correlations::classical_correlation(rho, qcore::Side::A) -
               correlations::classical_correlation(rho, qcore::Side::B);
    };
    // Differences below this are dominated by floating-point noise in the
    // entropy evaluation; their sign carries no information.
    constexpr double kNoise = 1e-12;

    // Bracket scan over confidently signed points, then bisection.
    constexpr int kScan = 64;
    double lo = 0.0, g_lo = 0.0, hi = 0.0;
    bool have_lo = false, bracketed = false;
    for (int i = 0; i <= kScan; ++i) {
        const double x = c.alpha_min + (c.alpha_max - c.alpha_min) * i / kScan;
        const double g = gap(x);
        if (std::abs(g) <= kNoise) continue;  // sign not resolvable here
        if (have_lo && (g < 0.0) != (g_lo < 0.0)) {
            hi = x;
            bracketed = true;
            break;
        }
        lo = x;
        g_lo = g;
        have_lo = true;
    }
    if (!bracketed) {
        std::ostringstream msg;
        msg << "no crossing: the classical-correlation difference does not change sign on ["
            << fmt12(c.alpha_min) << ", " << fmt12(c.alpha_max) << "] (endpoint values "
            << fmt12(gap(c.alpha_min)) << " and " << fmt12(gap(c.alpha_max)) << ")";
        throw NoCrossingError(msg.str());
    }

    while (hi - lo > 1e-5) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = gap(mid);
        if (std::abs(g_mid) <= kNoise) return mid;  // root located to noise precision
        if ((g_mid < 0.0) == (g_lo < 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::string state_dump(const blackhole::DilatonParams& p) {
    const qcore::DensityMatrix rho = blackhole::shared_state_direct(p);
    const qcore::Eigensystem es = qcore::hermitian_eigensystem(rho.matrix());
    const double s_a = qcore::von_neumann_entropy(qcore::partial_trace(rho, {0}));
    const double s_b = qcore::von_neumann_entropy(qcore::partial_trace(rho, {1}));
    const qcore::cplx overlap = oracle::overlap_diagnostic(p);

    std::ostringstream out;
    out << "shared state rho on [A, B] at mass=" << fmt12(p.mass) << " alpha=" << fmt12(p.alpha)
        << " omega=" << fmt12(p.omega) << " qr=" << fmt12(p.q_r.real());
    if (p.q_r.imag() != 0.0) out << "+" << fmt12(p.q_r.imag()) << "i";
    out << "\n\nreal part:\n";
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out << "  " << fmt12(rho.matrix()(i, j).real());
        out << "\n";
    }
    out << "\nimaginary part:\n";
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) out << "  " << fmt12(rho.matrix()(i, j).imag());
        out << "\n";
    }
    out << "\neigenvalues (descending):";
    for (double v : es.values) out << " " << fmt12(v);
    out << "\nmarginal entropies: S(A) = " << fmt12(s_a) << " bits, S(B) = " << fmt12(s_b)
        << " bits\n";
    out << "vacuum/one-particle overlap: " << fmt12(overlap.real()) << " + "
        << fmt12(overlap.imag()) << "i (magnitude " << fmt12(std::abs(overlap)) << ")\n";
    return out.str();
}

namespace {

struct Series {
    std::string label;
    std::string color;
    std::string dash;  // empty for solid
    std::vector<std::pair<double, double>> pts;
};

std::string svg_chart(const std::string& title, const std::string& x_label,
                      const std::string& y_label, double x_min, double x_max, double y_min,
                      double y_max, const std::vector<Series>& series) {
    constexpr double kw = 720, kh = 480, ml = 72, mr = 24, mt = 44, mb = 56;
    const double pw = kw - ml - mr, ph = kh - mt - mb;
    auto px = [&](double x) { return ml + pw * (x - x_min) / (x_max - x_min); };
    auto py = [&](double y) { return mt + ph * (1.0 - (y - y_min) / (y_max - y_min)); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kw << "\" height=\"" << kh
        << "\" viewBox=\"0 0 " << kw << " " << kh << "\">\n"
        << "<rect width=\"" << kw << "\" height=\"" << kh << "\" fill=\"white\"/>\n"
        << "<text x=\"" << kw / 2 << "\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"17\">" << title << "</text>\n";

    // Axes, ticks, grid.
    constexpr int kTicks = 5;
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int t = 0; t <= kTicks; ++t) {
        const double xv = x_min + (x_max - x_min) * t / kTicks;
        const double yv = y_min + (y_max - y_min) * t / kTicks;
        svg << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << mt + ph << "\" x2=\"" << num(px(xv))
            << "\" y2=\"" << mt << "\" stroke=\"#dddddd\"/>\n"
            << "<text x=\"" << num(px(xv)) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\">" << num(xv) << "</text>\n"
            << "<line x1=\"" << ml << "\" y1=\"" << num(py(yv)) << "\" x2=\"" << ml + pw
            << "\" y2=\"" << num(py(yv)) << "\" stroke=\"#dddddd\"/>\n"
            << "<text x=\"" << ml - 8 << "\" y=\"" << num(py(yv) + 4)
            << "\" text-anchor=\"end\">" << num(yv) << "</text>\n";
    }
    svg << "</g>\n"
        << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n"
        << "<text x=\"" << ml + pw / 2 << "\" y=\"" << kh - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << x_label
        << "</text>\n"
        << "<text x=\"20\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\""
        << " transform=\"rotate(-90 20 " << mt + ph / 2 << ")\">" << y_label << "</text>\n";

    for (const Series& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\"";
        if (!s.dash.empty()) svg << " stroke-dasharray=\"" << s.dash << "\"";
        svg << " points=\"";
        for (const auto& [x, y] : s.pts) svg << num(px(x)) << "," << num(py(y)) << " ";
        svg << "\"/>\n";
    }

    // Legend, top-right corner of the plot area.
    const double lx = ml + pw - 190, ly = mt + 14;
    svg << "<g font-family=\"sans-serif\" font-size=\"13\">\n";
    for (size_t k = 0; k < series.size(); ++k) {
        const double row_y = ly + 20.0 * static_cast<double>(k);
        svg << "<line x1=\"" << lx << "\" y1=\"" << row_y << "\" x2=\"" << lx + 34 << "\" y2=\""
            << row_y << "\" stroke=\"" << series[k].color << "\" stroke-width=\"1.8\"";
        if (!series[k].dash.empty()) svg << " stroke-dasharray=\"" << series[k].dash << "\"";
        svg << "/>\n<text x=\"" << lx + 42 << "\" y=\"" << row_y + 4 << "\">" << series[k].label
            << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

double y_ceiling(const std::vector<Series>& series) {
    double top = 1.0;
    for (const Series& s : series)
        for (const auto& [x, y] : s.pts) top = std::max(top, y);
    return 1.05 * top;
}

}  // namespace

std::string classical_svg(const SweepConfig& c, const std::vector<SweepRow>& rows) {
    Series cc_a{"measure on A", "#1f6fb4", "", {}};
    Series cc_b{"measure on B", "#d62728", "7,5", {}};
    for (const SweepRow& r : rows) {
        cc_a.pts.emplace_back(r.alpha, r.report.classical_a);
        cc_b.pts.emplace_back(r.alpha, r.report.classical_b);
    }
    std::vector<Series> series{cc_a, cc_b};
    return svg_chart("Classical correlation vs dilaton", "dilaton alpha", "bits", c.alpha_min,
                     c.alpha_max, 0.0, y_ceiling(series), series);
}

std::string quantum_svg(const SweepConfig& c, const std::vector<SweepRow>& rows) {
    Series d_a{"discord, measure on A", "#1f6fb4", "", {}};
    Series d_b{"discord, measure on B", "#d62728", "7,5", {}};
    Series m_q{"measurement-induced", "#2ca02c", "2,4", {}};
    for (const SweepRow& r : rows) {
        d_a.pts.emplace_back(r.alpha, r.report.discord_a);
        d_b.pts.emplace_back(r.alpha, r.report.discord_b);
        m_q.pts.emplace_back(r.alpha, r.report.mid_quantum);
    }
    std::vector<Series> series{d_a, d_b, m_q};
    return svg_chart("Quantum correlation vs dilaton", "dilaton alpha", "bits", c.alpha_min,
                     c.alpha_max, 0.0, y_ceiling(series), series);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace cliops
