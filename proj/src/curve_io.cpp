#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "scat/curve.hpp"
#include "scat/errors.hpp"

namespace scat {
namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string serialize_curve(const FourierCurve& curve) {
    std::ostringstream out;
    const int n = curve.mode_count();
    const int m_max = curve.max_mode();
    out << "fouriercurve v1 " << n << ' ' << fmt17(curve.length()) << '\n';
    for (int j = -m_max; j <= m_max; ++j) {
        const auto cx = curve.coeff_x(j);
        const auto cy = curve.coeff_y(j);
        out << j << ' ' << fmt17(cx.real()) << ' ' << fmt17(cx.imag()) << ' '
            << fmt17(cy.real()) << ' ' << fmt17(cy.imag()) << '\n';
    }
    return out.str();
}

FourierCurve parse_curve(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    const auto fail = [&](const std::string& what) -> ValidationError {
        return ValidationError(origin + ":" + std::to_string(line_no) + ": " + what);
    };
    if (!std::getline(in, line)) throw fail("empty curve file");
    ++line_no;
    std::istringstream head(line);
    std::string magic, version;
    int n_modes = 0;
    double length = 0.0;
    if (!(head >> magic >> version >> n_modes >> length) || magic != "fouriercurve" ||
        version != "v1") {
        throw fail("bad header, expected 'fouriercurve v1 N L'");
    }
    if (n_modes < 5 || n_modes % 2 == 0) throw fail("mode count must be odd and >= 5");
    const int m_max = (n_modes - 1) / 2;
    std::vector<std::complex<double>> cx(n_modes), cy(n_modes);
    for (int i = 0; i < n_modes; ++i) {
        if (!std::getline(in, line)) {
            ++line_no;
            throw fail("truncated file: expected " + std::to_string(n_modes) + " mode lines");
        }
        ++line_no;
        std::istringstream row(line);
        int j = 0;
        double rx, ix, ry, iy;
        if (!(row >> j >> rx >> ix >> ry >> iy)) {
            throw fail("malformed mode line, expected 'j re_x im_x re_y im_y'");
        }
        if (j != i - m_max) {
            throw fail("mode index out of order: expected " + std::to_string(i - m_max));
        }
        cx[i] = {rx, ix};
        cy[i] = {ry, iy};
    }
    try {
        return FourierCurve(std::move(cx), std::move(cy), length);
    } catch (const ValidationError& e) {
        throw ValidationError(origin + ": " + e.what());
    }
}

FourierCurve load_curve(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open curve file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve(buf.str(), path);
}

void save_curve(const FourierCurve& curve, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write curve file: " + path);
    out << serialize_curve(curve);
    if (!out) throw ValidationError("write failed: " + path);
}

}  // namespace scat
