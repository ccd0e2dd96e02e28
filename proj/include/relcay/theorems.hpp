#pragma once

// Predictions for Cay(G,H,C) computed from set arithmetic on (G, H, C) alone.
// Nothing in this header consults graph adjacency; the one place a printed
// condition mentions degrees (the square condition) uses the coset formula.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relcay/group.hpp"
#include "relcay/relcay.hpp"

namespace relcay {

/// The pieces of an instance as raw masks over one group.
struct Instance {
  const GroupTable* group = nullptr;
  Mask h = 0;
  Mask c = 0;

  static Instance of(const RelCayGraph& g) { return {&g.group(), g.h_mask(), g.connection().mask()}; }
  static Instance of(const GroupTable& g, const Subgroup& h, const ConnectionSet& c) {
    return {&g, h.mask(), c.mask()};
  }
};

struct ValencyPrediction {
  int index = 0;               // [G:H]
  int valency_bound = 0;       // min{[G:H], |H|+2}
  int sqrt_bound = 0;          // floor(sqrt(|G|+1)) + 1
  std::vector<int> degrees;    // per element, from the coset formula
  std::set<int> valencies;     // distinct values of `degrees`
  bool predicted_regular = false;       // [G:H] = 2 and H n C empty
  bool semi_regular_same_count = false; // C meets every left coset != H equally
  bool semi_regular_right_coset = false;// C inside one right coset != H
  bool predicted_semi_regular = false;  // either of the two
  Mask full_degree_coset = 0;           // intersection of Hc over c in C (G when C empty)
  Mask isolated_forced = 0;             // G \ HC*
};

struct DiameterBound {
  std::string name;
  double value = 0;
  bool applicable = false;
};

struct ConnectivityPrediction {
  bool hc_star_covers = false;   // G = HC*
  Mask witnesses = 0;            // g outside H with (HngC)<HnC><Hn(C\H)^2> = H
  bool predicted_connected = false;
  bool disjoint_case = false;    // H n C empty
  bool disjoint_criterion = false;  // G = HC* and H = <H n C^2>
  bool h_is_aba = false;
  bool aba_criterion = false;       // G = HC* and one of the two generates H
  Mask gen_hc = 0;               // <H n C>
  Mask h_c_minus_h_sq = 0;       // H n (C\H)^2
  Mask gen_h_c_minus_h_sq = 0;   // <H n (C\H)^2>
  std::optional<int> width_hc;
  std::optional<int> width_sq;
  std::vector<DiameterBound> diameter_bounds;  // width, half_sum, three_halves, h_plus_2, half_h_plus_2
};

struct CubeClosedCase {
  Mask d = 0;       // C^2
  Element c = 0;    // smallest member of C
};

struct CliquePrediction {
  int clique_upper = 0;                 // |H n C| + 2
  bool clique_upper_is_equality = false;
  int psi_hc = 1;
  int clique_lower_psi = 1;             // psi, or psi + 1 when the extra condition holds
  bool clique_lower_psi_plus = false;
  bool cube_closed = false;             // C nonempty and C^3 within C
  std::optional<CubeClosedCase> c_cubed_case;
};

/// Checks C = Dc with D = C^2 a subgroup, c^2 in D and D^c = D. Throws
/// InternalConsistencyError naming the first failed clause.
void verify_cube_decomposition(const GroupTable& group, Mask c, const CubeClosedCase& cc);

struct AlphaBetaPrediction {
  int alpha = 0;        // |G \ H|
  int alpha_prime = 0;  // |H|
  int beta = 0;         // |H|
  int beta_prime = 0;   // |G \ H|
  bool hypothesis_ok = false;  // C \ H nonempty
};

enum class Tri { False, True, Unevaluated };
std::string to_string(Tri t);

struct ChromaticPrediction {
  int chromatic_upper = 0;   // |H n C| + 2
  bool equality_i = false;
  Tri equality_ii = Tri::False;
  Tri predicted_equality = Tri::False;
};

enum class ForbiddenKind { ClawFree, Forest, Tree, TriangleFree, SquareFreeAsPrinted, BipartiteSufficient };

ForbiddenKind parse_forbidden_kind(const std::string& name);  // throws UnknownNameError
std::string to_string(ForbiddenKind kind);

struct ForbiddenPrediction {
  bool predicted = false;
  bool applicable = true;
  bool audited = false;   // oracle disagreement is a finding, not a failure
  std::string detail;     // evaluation of each printed clause
};

struct TheoremLimits {
  int chromatic_ii_cap = 11;
};

struct PredictionSet {
  ValencyPrediction valency;
  ConnectivityPrediction connectivity;
  CliquePrediction clique;
  AlphaBetaPrediction alpha_beta;
  ChromaticPrediction chromatic;
  std::map<ForbiddenKind, ForbiddenPrediction> forbidden;
};

ValencyPrediction predict_valencies(const Instance& in);
ConnectivityPrediction predict_connectivity(const Instance& in);
CliquePrediction predict_clique(const Instance& in);
AlphaBetaPrediction predict_alpha_beta(const Instance& in);
ChromaticPrediction predict_chromatic(const Instance& in, const TheoremLimits& limits = {});
ForbiddenPrediction predict_forbidden(const Instance& in, ForbiddenKind kind);
PredictionSet predict_all(const Instance& in, const TheoremLimits& limits = {});

struct ColoredEdge {
  Element u = 0;
  Element v = 0;  // u < v
  Element color = 0;
};

/// Proper edge colouring with labels drawn from (C \ {c}) u {1}.
struct EdgeColoring {
  Element fixed_c = 0;                // the chosen c in C \ H
  std::vector<ColoredEdge> edges;     // sorted by (u, v)
  Mask colors_used = 0;
};

/// Builds the class-one colouring: Gamma' is coloured with (H n C) u {1}
/// by a Misra-Gries pass, then each cross edge {h, hd} takes d, except the
/// edge {h, hc}, which takes the label missing at h. Throws PreconditionError
/// when C lies inside H and InternalConsistencyError if the result is improper.
EdgeColoring build_class_one_coloring(const RelCayGraph& graph);
EdgeColoring build_class_one_coloring(const Instance& in);

/// Misra-Gries edge colouring with at most Delta+1 colours. Colours are
/// 0-based and indexed like `edges`.
std::vector<int> misra_gries_edge_coloring(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace relcay
