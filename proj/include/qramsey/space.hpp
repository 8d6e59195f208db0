#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qramsey/index_set.hpp"
#include "qramsey/rational.hpp"

namespace qramsey {

// Point with exact rational coordinates.
using Point = std::vector<Rational>;

// Chebyshev (max-coordinate) distance; for dimension 1 this is the absolute
// difference. Keeps every distance rational, so ball membership is decidable.
Rational distance(const Point& a, const Point& b);

std::string point_to_string(const Point& p);               // "1/2" or "1/2,3/4"
Point point_from_string(const std::string& text, char sep = ',');

enum class SpaceKind { dyadic, integer_grid, custom_list };

std::string space_kind_name(SpaceKind kind);
SpaceKind parse_space_kind(const std::string& name);

struct SpaceDescriptor {
    SpaceKind kind = SpaceKind::dyadic;
    Rational lo = 0;  // dyadic interval
    Rational hi = 1;
    std::uint32_t dimension = 1;
    std::vector<Point> points;  // custom_list only

    nlohmann::json to_json() const;
    static SpaceDescriptor from_json(const nlohmann::json& j);
};

// Countable metric space given by a 1-1 enumeration of rational points.
// Points materialize lazily into an append-only log; materialization checks
// that no point repeats. Single writer, concurrent readers of an already
// materialized prefix.
class Space {
public:
    explicit Space(SpaceDescriptor descriptor);

    static Space dyadic(const Rational& lo, const Rational& hi);
    static Space integer_grid();
    static Space custom(std::vector<Point> points);

    const SpaceDescriptor& descriptor() const { return desc_; }
    std::uint32_t dimension() const { return desc_.dimension; }

    // Number of positions, when the enumeration is finite.
    std::optional<std::uint64_t> bound() const;
    bool in_range(OrdinalIndex index) const;

    // Materializes every position up to `index` on first access.
    const Point& point(OrdinalIndex index) const;
    Rational metric(OrdinalIndex a, OrdinalIndex b) const;

    std::uint64_t materialized() const { return log_.size(); }

    // Looks the point up in the materialization log only; an absent point is
    // the caller's error, the enumeration is never extended to search for it.
    std::optional<OrdinalIndex> find_index(const Point& p) const;

private:
    Point generate(OrdinalIndex index) const;

    SpaceDescriptor desc_;
    mutable std::vector<Point> log_;
    mutable std::unordered_map<std::string, OrdinalIndex> index_by_key_;
};

// One-sided density probe: for each of the first `prefix` points and each
// radius in `grid`, scan up to `budget` positions for a distinct point that
// close. Exhausting the budget is a reported finding, not an error.
struct DenseReport {
    std::uint64_t prefix = 0;
    std::vector<Rational> grid;
    std::uint64_t budget = 0;
    std::vector<std::pair<OrdinalIndex, Rational>> failures;

    bool ok() const { return failures.empty(); }
    nlohmann::json to_json() const;
};

DenseReport is_dense_in_itself(const Space& space, std::uint64_t prefix,
                               std::vector<Rational> grid, std::uint64_t budget);

// Index filter by congruence class; modulus 1 admits everything.
struct IndexFilter {
    std::uint32_t modulus = 1;
    std::uint32_t residue = 0;

    bool contains(OrdinalIndex index) const { return index % modulus == residue; }
    std::string str() const;
    static IndexFilter parse(const std::string& text);  // "all", "even", "odd", "mod:m,r"
    bool operator==(const IndexFilter&) const = default;
};

// Emits (n_k, l_k) for k = 2, 3, ... covering all of omega x omega exactly
// once with n_k < k-1. Pairs are generated in diagonal order (n+l ascending,
// then n ascending); a delay queue holds back any pair until the position is
// large enough for its first component.
class PairingSchedule {
public:
    std::pair<std::uint32_t, std::uint32_t> next();
    std::uint64_t position() const { return k_; }  // position of the next pair

private:
    std::uint64_t k_ = 2;
    std::uint32_t diag_ = 0;
    std::uint32_t offset_ = 0;  // n within the diagonal
    std::deque<std::pair<std::uint32_t, std::uint32_t>> delayed_;
};

// Trace of the greedy construction of an order-type-omega subsequence that is
// dense in itself: indices alpha_0 < alpha_1 < ..., the pair schedule it
// followed, and the ball radius used at each step k >= 2.
struct ExtractionCertificate {
    std::vector<OrdinalIndex> indices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairing;  // (n_k, l_k), k from 2
    std::vector<Rational> radii;                                   // epsilon_k, k from 2

    nlohmann::json to_json() const;
};

class BudgetExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Greedy selection: alpha_0, alpha_1 are the first two admissible indices;
// afterwards step k targets x_{alpha_{n_k}} with radius
// epsilon_k = min(1/(l_k+1), d(x_{alpha_{n_k}}, x_{alpha_{k-1}})) / 2
// and picks the first admissible index above alpha_{k-1} inside that ball.
// `budget` caps the total number of positions examined. Throws
// BudgetExhaustedError when the scan runs dry (isolated points, starved
// filter, or end of a finite enumeration).
ExtractionCertificate extract_omega_copy(const Space& space, const IndexFilter& filter,
                                         std::uint64_t steps, std::uint64_t budget);

// Re-checks a certificate against the space with exact arithmetic: indices
// strictly increase and pass the filter, n_k < k-1, the chosen point lies
// strictly inside the 1/(l_k+1) ball around its target, and the previous
// point lies outside the epsilon_k ball. Returns false (with the first
// offending clause in *why) instead of throwing.
bool certificate_valid(const Space& space, const IndexFilter& filter,
                       const ExtractionCertificate& cert, std::string* why = nullptr);

}  // namespace qramsey
