#include "qramsey/space.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace qramsey {

Rational distance(const Point& a, const Point& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("distance: dimension mismatch");
    Rational best = abs(a[0] - b[0]);
    for (std::size_t i = 1; i < a.size(); ++i) {
        Rational d = abs(a[i] - b[i]);
        if (d > best) best = d;
    }
    return best;
}

std::string point_to_string(const Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += to_string(p[i]);
    }
    return out;
}

Point point_from_string(const std::string& text, char sep) {
    Point p;
    std::stringstream in(text);
    std::string coord;
    while (std::getline(in, coord, sep)) p.push_back(parse_rational(coord));
    if (p.empty()) throw std::invalid_argument("point_from_string: empty point");
    return p;
}

std::string space_kind_name(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::dyadic: return "dyadic";
        case SpaceKind::integer_grid: return "integer-grid";
        case SpaceKind::custom_list: return "custom-list";
    }
    throw std::logic_error("unreachable");
}

SpaceKind parse_space_kind(const std::string& name) {
    if (name == "dyadic") return SpaceKind::dyadic;
    if (name == "integer-grid") return SpaceKind::integer_grid;
    if (name == "custom-list") return SpaceKind::custom_list;
    throw std::invalid_argument("unknown space kind: '" + name + "'");
}

nlohmann::json SpaceDescriptor::to_json() const {
    nlohmann::json j{{"kind", space_kind_name(kind)}, {"dimension", dimension}};
    if (kind == SpaceKind::dyadic) j["interval"] = {to_string(lo), to_string(hi)};
    if (kind == SpaceKind::custom_list) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& p : points) pts.push_back(point_to_string(p));
        j["points"] = pts;
    }
    return j;
}

SpaceDescriptor SpaceDescriptor::from_json(const nlohmann::json& j) {
    SpaceDescriptor d;
    d.kind = parse_space_kind(j.at("kind").get<std::string>());
    d.dimension = j.value("dimension", 1u);
    if (d.kind == SpaceKind::dyadic) {
        auto iv = j.at("interval");
        d.lo = parse_rational(iv.at(0).get<std::string>());
        d.hi = parse_rational(iv.at(1).get<std::string>());
    }
    if (d.kind == SpaceKind::custom_list)
        for (const auto& p : j.at("points"))
            d.points.push_back(point_from_string(p.get<std::string>()));
    return d;
}

Space::Space(SpaceDescriptor descriptor) : desc_(std::move(descriptor)) {
    if (desc_.dimension == 0) throw std::invalid_argument("space: dimension must be >= 1");
    switch (desc_.kind) {
        case SpaceKind::dyadic:
            if (!(desc_.lo < desc_.hi))
                throw std::invalid_argument("dyadic space: empty interval [" +
                                            to_string(desc_.lo) + "," + to_string(desc_.hi) + ")");
            if (desc_.dimension != 1)
                throw std::invalid_argument("dyadic space: dimension must be 1");
            break;
        case SpaceKind::integer_grid:
            if (desc_.dimension != 1)
                throw std::invalid_argument("integer-grid space: dimension must be 1");
            break;
        case SpaceKind::custom_list:
            if (desc_.points.empty())
                throw std::invalid_argument("custom-list space: no points");
            for (const auto& p : desc_.points)
                if (p.size() != desc_.dimension)
                    throw std::invalid_argument("custom-list space: point '" + point_to_string(p) +
                                                "' has wrong dimension");
            break;
    }
}

Space Space::dyadic(const Rational& lo, const Rational& hi) {
    SpaceDescriptor d;
    d.kind = SpaceKind::dyadic;
    d.lo = lo;
    d.hi = hi;
    return Space(d);
}

Space Space::integer_grid() {
    SpaceDescriptor d;
    d.kind = SpaceKind::integer_grid;
    return Space(d);
}

Space Space::custom(std::vector<Point> points) {
    SpaceDescriptor d;
    d.kind = SpaceKind::custom_list;
    d.dimension = points.empty() ? 1 : static_cast<std::uint32_t>(points.front().size());
    d.points = std::move(points);
    return Space(d);
}

std::optional<std::uint64_t> Space::bound() const {
    if (desc_.kind == SpaceKind::custom_list) return desc_.points.size();
    return std::nullopt;
}

bool Space::in_range(OrdinalIndex index) const {
    auto b = bound();
    return !b || index < *b;
}

Point Space::generate(OrdinalIndex index) const {
    switch (desc_.kind) {
        case SpaceKind::dyadic: {
            // Level-order walk of the dyadic rationals of (lo,hi): midpoint,
            // then quarter points left to right, then eighths, ...
            std::uint64_t pos = static_cast<std::uint64_t>(index) + 1;
            unsigned level = std::bit_width(pos);                  // >= 1
            std::uint64_t offset = pos - (1ull << (level - 1));    // within the level
            Rational frac(2 * offset + 1);
            frac /= Rational(mpz_class(1) << level);
            return {desc_.lo + (desc_.hi - desc_.lo) * frac};
        }
        case SpaceKind::integer_grid: return {Rational(index)};
        case SpaceKind::custom_list: return desc_.points[index];
    }
    throw std::logic_error("unreachable");
}

const Point& Space::point(OrdinalIndex index) const {
    if (!in_range(index))
        throw std::invalid_argument("space: position " + std::to_string(index) +
                                    " beyond the enumeration (size " +
                                    std::to_string(*bound()) + ")");
    while (log_.size() <= index) {
        OrdinalIndex next = static_cast<OrdinalIndex>(log_.size());
        Point p = generate(next);
        auto [it, fresh] = index_by_key_.emplace(point_to_string(p), next);
        if (!fresh)
            throw std::invalid_argument("space: enumeration is not 1-1, point " +
                                        point_to_string(p) + " repeats at positions " +
                                        std::to_string(it->second) + " and " +
                                        std::to_string(next));
        log_.push_back(std::move(p));
    }
    return log_[index];
}

Rational Space::metric(OrdinalIndex a, OrdinalIndex b) const {
    return qramsey::distance(point(a), point(b));
}

std::optional<OrdinalIndex> Space::find_index(const Point& p) const {
    auto it = index_by_key_.find(point_to_string(p));
    if (it == index_by_key_.end()) return std::nullopt;
    return it->second;
}

DenseReport is_dense_in_itself(const Space& space, std::uint64_t prefix,
                               std::vector<Rational> grid, std::uint64_t budget) {
    if (prefix == 0) throw std::invalid_argument("is_dense_in_itself: empty prefix");
    DenseReport report;
    report.prefix = prefix;
    report.grid = std::move(grid);
    report.budget = budget;

    for (OrdinalIndex i = 0; i < prefix && space.in_range(i); ++i) {
        const Point& center = space.point(i);
        for (const Rational& eps : report.grid) {
            if (eps <= 0) throw std::invalid_argument("is_dense_in_itself: radius must be > 0");
            bool found = false;
            for (std::uint64_t j = 0; j < budget && space.in_range(static_cast<OrdinalIndex>(j));
                 ++j) {
                if (j == i) continue;
                if (distance(space.point(static_cast<OrdinalIndex>(j)), center) < eps) {
                    found = true;
                    break;
                }
            }
            if (!found) report.failures.emplace_back(i, eps);
        }
    }
    return report;
}

nlohmann::json DenseReport::to_json() const {
    nlohmann::json grid_json = nlohmann::json::array();
    for (const auto& eps : grid) grid_json.push_back(to_string(eps));
    nlohmann::json failures_json = nlohmann::json::array();
    for (const auto& [index, eps] : failures)
        failures_json.push_back({{"index", index}, {"eps", to_string(eps)}});
    return {{"prefix", prefix},
            {"grid", grid_json},
            {"budget", budget},
            {"failures", failures_json}};
}

std::string IndexFilter::str() const {
    if (modulus == 1) return "all";
    if (modulus == 2) return residue == 0 ? "even" : "odd";
    return "mod:" + std::to_string(modulus) + "," + std::to_string(residue);
}

IndexFilter IndexFilter::parse(const std::string& text) {
    if (text == "all" || text.empty()) return {1, 0};
    if (text == "even") return {2, 0};
    if (text == "odd") return {2, 1};
    if (text.rfind("mod:", 0) == 0) {
        auto comma = text.find(',', 4);
        if (comma != std::string::npos) {
            IndexFilter f;
            f.modulus = static_cast<std::uint32_t>(std::stoul(text.substr(4, comma - 4)));
            f.residue = static_cast<std::uint32_t>(std::stoul(text.substr(comma + 1)));
            if (f.modulus == 0 || f.residue >= f.modulus)
                throw std::invalid_argument("filter: need modulus >= 1 and residue < modulus");
            return f;
        }
    }
    throw std::invalid_argument("filter: expected all|even|odd|mod:m,r, got '" + text + "'");
}

std::pair<std::uint32_t, std::uint32_t> PairingSchedule::next() {
    // eligible once the position exceeds n+1
    for (auto it = delayed_.begin(); it != delayed_.end(); ++it) {
        if (k_ > it->first + 1) {
            auto pair = *it;
            delayed_.erase(it);
            ++k_;
            return pair;
        }
    }
    while (true) {
        std::pair<std::uint32_t, std::uint32_t> pair{offset_, diag_ - offset_};
        if (offset_ == diag_) {
            ++diag_;
            offset_ = 0;
        } else {
            ++offset_;
        }
        if (k_ > pair.first + 1) {
            ++k_;
            return pair;
        }
        delayed_.push_back(pair);
    }
}

nlohmann::json ExtractionCertificate::to_json() const {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [n, l] : pairing) pairs.push_back({n, l});
    nlohmann::json radii_json = nlohmann::json::array();
    for (const auto& r : radii) radii_json.push_back(to_string(r));
    return {{"indices", indices}, {"pairing", pairs}, {"radii", radii_json}};
}

ExtractionCertificate extract_omega_copy(const Space& space, const IndexFilter& filter,
                                         std::uint64_t steps, std::uint64_t budget) {
    if (steps < 2) throw std::invalid_argument("extract_omega_copy: need at least two steps");
    ExtractionCertificate cert;
    std::uint64_t scanned = 0;
    std::uint64_t cursor = 0;

    auto next_admissible = [&](auto&& accept) -> OrdinalIndex {
        while (true) {
            if (scanned >= budget)
                throw BudgetExhaustedError("extract_omega_copy: budget of " +
                                           std::to_string(budget) + " positions exhausted at step " +
                                           std::to_string(cert.indices.size()));
            if (!space.in_range(static_cast<OrdinalIndex>(cursor)))
                throw BudgetExhaustedError("extract_omega_copy: enumeration ended at step " +
                                           std::to_string(cert.indices.size()));
            OrdinalIndex candidate = static_cast<OrdinalIndex>(cursor);
            ++cursor;
            ++scanned;
            if (filter.contains(candidate) && accept(candidate)) return candidate;
        }
    };

    cert.indices.push_back(next_admissible([](OrdinalIndex) { return true; }));
    cert.indices.push_back(next_admissible([](OrdinalIndex) { return true; }));

    PairingSchedule schedule;
    for (std::uint64_t k = 2; k < steps; ++k) {
        auto [n, l] = schedule.next();
        const Point& target = space.point(cert.indices[n]);
        const Point& previous = space.point(cert.indices[k - 1]);
        Rational gap = distance(target, previous);  // > 0: enumeration is 1-1
        Rational eps = Rational(1, l + 1);
        if (gap < eps) eps = gap;
        eps /= 2;
        OrdinalIndex chosen = next_admissible(
            [&](OrdinalIndex i) { return distance(space.point(i), target) < eps; });
        cert.indices.push_back(chosen);
        cert.pairing.emplace_back(n, l);
        cert.radii.push_back(eps);
    }
    return cert;
}

bool certificate_valid(const Space& space, const IndexFilter& filter,
                       const ExtractionCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    const auto& idx = cert.indices;
    if (idx.size() < 2) return fail("fewer than two indices");
    if (cert.pairing.size() != idx.size() - 2 || cert.radii.size() != idx.size() - 2)
        return fail("pairing/radii length mismatch");
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (!filter.contains(idx[k])) return fail("index outside filter at k=" + std::to_string(k));
        if (k > 0 && idx[k - 1] >= idx[k])
            return fail("indices not strictly increasing at k=" + std::to_string(k));
    }
    for (std::size_t k = 2; k < idx.size(); ++k) {
        auto [n, l] = cert.pairing[k - 2];
        const Rational& eps = cert.radii[k - 2];
        if (n >= k - 1) return fail("n_k >= k-1 at k=" + std::to_string(k));
        if (!(space.metric(idx[k], idx[n]) < Rational(1, l + 1)))
            return fail("chosen point outside the 1/(l+1) ball at k=" + std::to_string(k));
        if (space.metric(idx[k - 1], idx[n]) < eps)
            return fail("previous point not excluded at k=" + std::to_string(k));
        if (!(space.metric(idx[k], idx[n]) < eps))
            return fail("chosen point outside the epsilon ball at k=" + std::to_string(k));
    }
    return true;
}

}  // namespace qramsey
