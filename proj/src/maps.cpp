#include "sperner/maps.hpp"

#include <charconv>
#include <random>
#include <string>

#include "sperner/errors.hpp"

namespace sperner {

MapOnSimplex identity_map(int n) {
    return {n, "identity", [](const RealPoint& x) { return x; }};
}

MapOnSimplex constant_map(RealPoint c) {
    if (!is_valid_point(c)) throw InvalidInput("constant map value is not a point of the simplex");
    const int n = static_cast<int>(c.size()) - 1;
    return {n, "constant", [c = std::move(c)](const RealPoint&) { return c; }};
}

MapOnSimplex rotate_map(int n) {
    return {n, "rotate", [](const RealPoint& x) {
                RealPoint y(x.size());
                for (std::size_t j = 0; j < x.size(); ++j) y[j] = x[(j + x.size() - 1) % x.size()];
                return y;
            }};
}

MapOnSimplex quadratic_map(int n, std::uint64_t seed) {
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    // P[k][l] is the probability vector for the monomial x_k x_l.
    std::vector<std::vector<RealPoint>> P(d, std::vector<RealPoint>(d, RealPoint(d)));
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = k; l < d; ++l) {
            double total = 0.0;
            for (auto& p : P[k][l]) {
                p = unif(rng);
                total += p;
            }
            for (auto& p : P[k][l]) p /= total;
            P[l][k] = P[k][l];
        }
    return {n, "quadratic:" + std::to_string(seed), [P = std::move(P)](const RealPoint& x) {
                RealPoint y(x.size(), 0.0);
                for (std::size_t k = 0; k < x.size(); ++k)
                    for (std::size_t l = 0; l < x.size(); ++l) {
                        const double w = x[k] * x[l];
                        for (std::size_t j = 0; j < x.size(); ++j) y[j] += P[k][l][j] * w;
                    }
                return y;
            }};
}

MapOnSimplex affine_map(std::vector<std::vector<double>> columns, RealPoint shift, double shift_weight) {
    const std::size_t d = columns.size();
    if (d == 0 || shift.size() != d || shift_weight < 0.0 || shift_weight > 1.0 || !is_valid_point(shift))
        throw InvalidInput("affine map: bad shape");
    for (const auto& col : columns)
        if (col.size() != d || !is_valid_point(col)) throw InvalidInput("affine map: columns must be points of the simplex");
    return {static_cast<int>(d) - 1, "affine",
            [columns = std::move(columns), shift = std::move(shift), shift_weight](const RealPoint& x) {
                RealPoint y(x.size(), 0.0);
                for (std::size_t k = 0; k < x.size(); ++k)
                    for (std::size_t j = 0; j < x.size(); ++j) y[j] += (1.0 - shift_weight) * columns[k][j] * x[k];
                for (std::size_t j = 0; j < x.size(); ++j) y[j] += shift_weight * shift[j];
                return y;
            }};
}

namespace {

double parse_double(std::string_view s) {
    try {
        std::size_t used = 0;
        const std::string text(s);
        const double v = std::stod(text, &used);
        if (used != text.size()) throw InvalidInput("");
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("malformed number '" + std::string(s) + "' in map spec");
    }
}

} // namespace

MapOnSimplex make_map(std::string_view spec, int n) {
    const auto colon = spec.find(':');
    const std::string_view name = spec.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    if (n < 0 || n > kMaxDim) throw InvalidInput("map dimension out of range");
    if (name == "identity" && arg.empty()) return identity_map(n);
    if (name == "rotate" && arg.empty()) return rotate_map(n);
    if (name == "constant") {
        RealPoint c;
        std::string_view rest = arg;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            c.push_back(parse_double(rest.substr(0, comma)));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        if (static_cast<int>(c.size()) != n + 1)
            throw InvalidInput("constant map needs " + std::to_string(n + 1) + " coordinates");
        MapOnSimplex f = constant_map(std::move(c));
        f.name = std::string(spec);
        return f;
    }
    if (name == "quadratic") {
        std::uint64_t seed = 0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), seed);
        if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size())
            throw InvalidInput("quadratic map needs an integer seed");
        return quadratic_map(n, seed);
    }
    throw InvalidInput("unknown map '" + std::string(spec) + "'");
}

} // namespace sperner
