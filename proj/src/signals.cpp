#include "lik/signals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lik/io.hpp"
#include "lik/rng.hpp"

namespace lik {

namespace {

constexpr std::uint64_t kCenteringSeed = 0x5ca1ab1e;
constexpr int kCenteringDraws = 1'000'000;

double eval_raw(const SignalFn& g, double x) {
    switch (g.kind) {
        case SignalFn::Kind::polynomial: {
            double acc = 0.0;
            for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) acc = acc * x + *it;
            return acc;
        }
        case SignalFn::Kind::sinusoid:
            return g.amp * std::sin(g.freq * x);
        case SignalFn::Kind::piecewise_constant: {
            // left-closed cells, last cell closed on both ends
            auto it = std::upper_bound(g.breaks.begin(), g.breaks.end(), x);
            std::ptrdiff_t cell = std::distance(g.breaks.begin(), it) - 1;
            cell = std::clamp<std::ptrdiff_t>(cell, 0,
                                              static_cast<std::ptrdiff_t>(g.values.size()) - 1);
            return g.values[static_cast<std::size_t>(cell)];
        }
    }
    fail(Status::invalid_argument, "bad signal kind");
}

// Monte-Carlo mean over uniform [-1,1], fixed internal seed.
double centering_offset(const SignalFn& g) {
    SplitMix64 rng(kCenteringSeed);
    double acc = 0.0;
    for (int i = 0; i < kCenteringDraws; ++i) acc += eval_raw(g, rng.uniform(-1.0, 1.0));
    return acc / kCenteringDraws;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

}  // namespace

SignalFn SignalFn::polynomial_fn(std::vector<double> coeffs) {
    if (coeffs.empty()) fail(Status::invalid_argument, "polynomial needs coefficients");
    SignalFn g;
    g.kind = Kind::polynomial;
    g.coeffs = std::move(coeffs);
    g.offset = centering_offset(g);
    return g;
}

SignalFn SignalFn::piecewise_fn(std::vector<double> breaks, std::vector<double> values) {
    if (breaks.size() != values.size() + 1 || values.empty())
        fail(Status::invalid_argument, "piecewise needs m+1 breaks for m values");
    if (!std::is_sorted(breaks.begin(), breaks.end()))
        fail(Status::invalid_argument, "piecewise breaks must be ascending");
    SignalFn g;
    g.kind = Kind::piecewise_constant;
    g.breaks = std::move(breaks);
    g.values = std::move(values);
    g.offset = centering_offset(g);
    return g;
}

SignalFn SignalFn::sinusoid_fn(double freq, double amp) {
    SignalFn g;
    g.kind = Kind::sinusoid;
    g.freq = freq;
    g.amp = amp;
    g.offset = centering_offset(g);
    return g;
}

SignalFn SignalFn::parse(const std::string& text) {
    auto colon = text.find(':');
    std::string name = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (name == "poly") return polynomial_fn(parse_list(args));
    if (name == "sin") {
        auto v = parse_list(args);
        if (v.size() != 2) fail(Status::invalid_argument, "sin needs freq,amp: '" + text + "'");
        return sinusoid_fn(v[0], v[1]);
    }
    if (name == "piecewise") {
        auto semi = args.find(';');
        if (semi == std::string::npos)
            fail(Status::invalid_argument, "piecewise needs breaks;values: '" + text + "'");
        return piecewise_fn(parse_list(args.substr(0, semi)), parse_list(args.substr(semi + 1)));
    }
    if (name == "zero") return zero();
    fail(Status::invalid_argument, "unknown signal '" + text + "'");
}

std::string SignalFn::to_string() const {
    std::ostringstream out;
    auto join = [&out](const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out << ",";
            out << format_g17(v[i]);
        }
    };
    switch (kind) {
        case Kind::polynomial:
            out << "poly:";
            join(coeffs);
            break;
        case Kind::sinusoid:
            out << "sin:" << format_g17(freq) << "," << format_g17(amp);
            break;
        case Kind::piecewise_constant:
            out << "piecewise:";
            join(breaks);
            out << ";";
            join(values);
            break;
    }
    return out.str();
}

double SignalFn::eval1(double x) const { return eval_raw(*this, x) - offset; }

double SignalFn::eval(const Vector& x) const {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) acc += eval1(x[i]);
    return acc;
}

}  // namespace lik
