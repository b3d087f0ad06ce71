// Copyright 2026 The fockhrt Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockhrt/svg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "fockhrt/error.hpp"

namespace fockhrt {

namespace {

constexpr double kSize = 400.0;
constexpr double kSpan = 1.6;  // half-width of the viewed square in the plane

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

double px(double x) { return (x + kSpan) / (2 * kSpan) * kSize; }
double py(double y) { return (kSpan - y) / (2 * kSpan) * kSize; }

void line(std::ostringstream& os, std::complex<double> a, std::complex<double> b, const char* style) {
    os << "  <line x1=\"" << fmt(px(a.real())) << "\" y1=\"" << fmt(py(a.imag())) << "\" x2=\""
       << fmt(px(b.real())) << "\" y2=\"" << fmt(py(b.imag())) << "\" " << style << "/>\n";
}

// Lines offset + t*dir + k*step for all k whose line can meet the view.
void family(std::ostringstream& os, std::complex<double> offset, std::complex<double> dir,
            std::complex<double> step) {
    const double cross = std::abs((std::conj(dir) * step).imag()) / std::abs(dir);
    if (cross <= 0.0) return;
    const int K = static_cast<int>(std::ceil((std::abs(offset) + 2 * kSpan) / cross)) + 1;
    const double L = (std::abs(offset) + K * std::abs(step) + 2 * kSpan) / std::abs(dir);
    for (int k = -K; k <= K; ++k) {
        const std::complex<double> base = offset + static_cast<double>(k) * step;
        line(os, base - L * dir, base + L * dir,
             "stroke=\"#9ab\" stroke-width=\"1\" clip-path=\"url(#view)\"");
    }
}

}  // namespace

std::string roots_figure_svg(int d, const exact::MembershipResult& lattice) {
    if (d < 1) throw invalid_argument("roots figure: d must be >= 1");
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    os << "  <defs><clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"" << kSize << "\" height=\""
       << kSize << "\"/></clipPath></defs>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (lattice.embeddable && lattice.witness) {
        const auto e1 = lattice.witness->e1.to_complex();
        const auto e2 = lattice.witness->e2.to_complex();
        const auto off = lattice.witness->offset.to_complex();
        family(os, off, e1, e2);
        family(os, off, e2, e1);
    }
    line(os, {-kSpan, 0.0}, {kSpan, 0.0}, "stroke=\"#444\" stroke-width=\"1\"");
    line(os, {0.0, -kSpan}, {0.0, kSpan}, "stroke=\"#444\" stroke-width=\"1\"");
    os << "  <circle cx=\"" << fmt(px(0)) << "\" cy=\"" << fmt(py(0)) << "\" r=\""
       << fmt(kSize / (2 * kSpan)) << "\" fill=\"none\" stroke=\"#333\" stroke-dasharray=\"4 3\"/>\n";
    for (int k = 0; k < d; ++k) {
        const auto z = std::polar(1.0, 2.0 * std::numbers::pi * k / d);
        os << "  <circle cx=\"" << fmt(px(z.real())) << "\" cy=\"" << fmt(py(z.imag()))
           << "\" r=\"5\" fill=\"#c22\"/>\n";
    }
    os << "  <text x=\"8\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">d = " << d
       << (lattice.embeddable ? ", lattice" : ", no lattice") << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::string sigma_curve_svg(const std::vector<SigmaSeries>& series) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (!(y > 0.0)) continue;
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, std::log10(y));
            ymax = std::max(ymax, std::log10(y));
        }
    }
    if (xmin > xmax) throw invalid_argument("sigma curve: no positive data");
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax - ymin < 1e-3) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double W = 480, H = 320, pad = 40;
    auto sx = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (W - 2 * pad); };
    auto sy = [&](double y) { return H - pad - (y - ymin) / (ymax - ymin) * (H - 2 * pad); };
    static const char* kColors[] = {"#c22", "#26c", "#292", "#a5c", "#e80", "#555"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <path d=\"M" << pad << ' ' << pad << " V" << H - pad << " H" << W - pad
       << "\" fill=\"none\" stroke=\"#444\"/>\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kColors[i % 6];
        os << "  <polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
        bool first = true;
        for (const auto& [x, y] : series[i].points) {
            if (!(y > 0.0)) continue;
            os << (first ? "" : " ") << fmt(sx(x)) << ',' << fmt(sy(std::log10(y)));
            first = false;
        }
        os << "\"/>\n";
        os << "  <text x=\"" << W - pad - 80 << "\" y=\"" << pad + 16 * static_cast<double>(i)
           << "\" fill=\"" << color << "\" font-family=\"sans-serif\" font-size=\"12\">"
           << series[i].name << "</text>\n";
    }
    os << "  <text x=\"" << pad << "\" y=\"" << H - 8
       << "\" font-family=\"sans-serif\" font-size=\"12\">M (log10 sigma_min vertical)</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace fockhrt
