#pragma once

#include <string>
#include <vector>

#include "singer/certificate.hpp"
#include "singer/triangulation.hpp"

namespace singer {

// Runs the decomposition recursion and returns a certificate whose nodes
// carry enough witnesses to be re-checked independently.  Dispatch order per
// complex: boundary simplex, suspension of a 3-/4-/5-gon, L6, first empty
// Euclidean circuit (split and recurse), star replacement plus Andreev.
// Throws NotMetricFlag on bad input and InternalContradiction whenever an
// assertion the theory guarantees fails (never swallowed).
Certificate certify(const LabeledTriangulation& L);

struct VerificationFailure {
    std::string path;  // "root", "root.left", ...
    std::string reason;
};

struct VerificationReport {
    bool accepted = true;
    std::vector<VerificationFailure> failures;
};

// Re-checks every hypothesis of every node from scratch: digests, circuit
// emptiness and sides, Euclidean classifications and non-adjacency,
// fullness of cited links and stars, reconstructed reduced complexes,
// Andreev transcripts instance by instance, Gram classes.  Never throws;
// failures are report entries.
VerificationReport verify(const LabeledTriangulation& L, const Certificate& cert);

}  // namespace singer
