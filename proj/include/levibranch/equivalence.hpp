#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "levibranch/branching.hpp"

namespace lvb {

/// Sufficient conditions under which equal induced characters force a
/// relating diagram automorphism.
enum class Coverage { SameChamber, FarFromWalls, Mu2RhoDominant, TypeA, Polarisation };
std::string_view coverage_name(Coverage c);

struct PairVerdict {
  Weight mu, nu;
  bool equal = false;
  std::optional<WeylElement> relating_auto;
  std::vector<Coverage> covered_by;
  bool counterexample = false;

  nlohmann::json to_json() const;
};

nlohmann::json weyl_element_to_json(const WeylElement& w);

/// H_mu == H_nu, decided by M_mu == M_nu after the orbit and leading-term filters.
bool induced_equal(const BranchingContext& ctx, const Weight& mu, const Weight& nu);
/// A diagram automorphism u with u(mu) = nu, if any.
std::optional<WeylElement> relating_automorphism(const BranchingContext& ctx, const Weight& mu, const Weight& nu);
/// The g = so_{2n+1}, sp_{2n}, so_{2n} with Levi gl_n case; type D needs n even
/// so that -w̄0 lies in W.
bool polarisation_case(const LeviDatum& levi);
/// Every case of the classification that applies to (mu, nu).
std::vector<Coverage> coverage(const BranchingContext& ctx, const Weight& mu, const Weight& nu);
/// Throws std::logic_error on a covered counterexample.
PairVerdict classify_pair(const BranchingContext& ctx, const Weight& mu, const Weight& nu);

/// Levi-dominant weights in g's lattice with every |coordinate| <= bound, spin
/// weights included for B and D; sorted.
std::vector<Weight> levi_box(const LeviDatum& levi, int bound);

struct SearchSummary {
  std::uint64_t weights = 0;
  std::uint64_t groups = 0;
  std::uint64_t pairs_tested = 0;
  std::uint64_t equal_pairs = 0;
  std::uint64_t autos_found = 0;
  std::uint64_t counterexamples = 0;
  double seconds = 0;

  nlohmann::json to_json() const;
};

/// Outcome of one W-orbit group: the equal pairs and how many pairs were compared.
struct GroupReport {
  std::size_t index = 0;
  std::uint64_t pairs_tested = 0;
  std::vector<PairVerdict> verdicts;
};
/// Receives every processed group, in group order.
using GroupSink = std::function<void(const GroupReport&)>;

/// Compares every unordered pair inside each W-orbit group of the box and
/// reports the equal ones. Groups before `first_group` are skipped; `threads`
/// workers process groups, the sink always sees them in order.
SearchSummary search_box(const BranchingContext& ctx, int bound, const GroupSink& sink, unsigned threads = 1,
                         std::size_t first_group = 0);

/// search_box writing one JSON line per verdict to `certs`. A sidecar
/// "<certs>.ckpt" records the last completed group; with `resume` the scan
/// continues from it and the certificate file ends up byte-identical to an
/// uninterrupted run. Throws IoError on write failures.
SearchSummary search_to_file(const BranchingContext& ctx, int bound, const std::filesystem::path& certs,
                             unsigned threads = 1, bool resume = false);

}  // namespace lvb
