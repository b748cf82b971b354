#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "singer/andreev.hpp"
#include "singer/coxeter.hpp"
#include "singer/reduction.hpp"

namespace singer {

inline constexpr const char* kEngineVersion = "singer/1.0.0";
inline constexpr const char* kCertificateFormat = "singer-certificate-v1";

struct CertTree;

// L is the boundary of a 3-simplex; the Gram class of its four generators
// decides between the Euclidean and the compact hyperbolic simplex group.
struct NodeBaseSimplex {
    bool euclidean = false;  // PSD corank 1 <-> true, Indefinite <-> false
    GramClass gram;
    std::vector<int> vertices;  // the four generators
};

// --- suspension subcases (suspensions of 3-, 4-, 5-gons) ---

struct SubAndreevDirect {
    AndreevTranscript transcript;  // passing transcript of the dual of L itself
};
struct SubRightAngledSuspension {};  // every pole-equator edge labeled 2
struct SubEuclideanPolesSplit {};    // both poles Euclidean; stars cover L
struct SubFiveGonReduction {
    int v = -1;  // the lone relevant 4-Euclidean equator vertex
    std::string reduced_digest;
    AndreevTranscript transcript;  // passing transcript of the dual of [L-v]
};
struct SubFiveGonFigure4Split {
    int v = -1;  // 4-Euclidean equator vertex whose reduction fails (v)
    int s = -1;  // second 4-Euclidean vertex; star plus right-angled rest
    std::string reduced_digest;
    AndreevInstance failed_instance;  // the failing condition-(v) instance
};
struct SubFiveGonAdjacentEuclidean {
    int v = -1;  // adjacent 4-Euclidean pair
    int w = -1;
    int v_prime = -1;  // the opposite 4-Euclidean vertex whose star splits off
};

using SuspensionSubcase = std::variant<SubAndreevDirect, SubRightAngledSuspension, SubEuclideanPolesSplit,
                                       SubFiveGonReduction, SubFiveGonFigure4Split, SubFiveGonAdjacentEuclidean>;

std::string subcase_tag(const SuspensionSubcase& s);

struct NodeSuspension {
    int n = 0;  // 3, 4 or 5
    std::array<int, 2> poles{};
    std::vector<int> equator;  // cycle order
    SuspensionSubcase subcase;
};

struct NodeL6 {
    L6Witness witness;
};

struct NodeCircuitSplit {
    EmptyEuclideanCircuit circuit;
    std::unique_ptr<CertTree> left;   // certificate for the side1 cap
    std::unique_ptr<CertTree> right;  // certificate for the side2 cap
};

struct NodeEuclideanReduction {
    std::vector<int> euclidean_vertices;  // T, sorted; may be empty
    std::string reduced_digest;
    bool dual_is_simplex = false;
    GramClass simplex_gram;                      // when dual_is_simplex
    std::optional<AndreevTranscript> transcript;  // otherwise: passing transcript
};

using CertNode =
    std::variant<NodeBaseSimplex, NodeSuspension, NodeL6, NodeCircuitSplit, NodeEuclideanReduction>;

std::string node_kind(const CertNode& node);

// A node together with the digest of the canonical document of the complex
// it certifies.  Children of circuit splits are full subtrees with their own
// digests, so every piece is independently re-checkable.
struct CertTree {
    std::string digest;
    CertNode node;
};

struct Certificate {
    std::string engine = kEngineVersion;
    CertTree root;
};

// One line per node, indented by depth; the root line doubles as the CLI
// summary (e.g. "SuspensionCase n=4 EuclideanPolesSplit").
std::string summary_line(const CertNode& node);
std::string summary_tree(const CertTree& tree);

// Canonical JSON bytes: identical input -> identical bytes.
std::string serialize(const Certificate& cert);
Certificate deserialize(const std::string& bytes);

}  // namespace singer
