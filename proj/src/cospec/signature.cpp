#include <stdexcept>

#include "qgraph/cospec.hpp"
#include "qgraph/spectral.hpp"

namespace qgraph {

std::string to_string(CompareMode mode) {
  return mode == CompareMode::Set ? "set" : "multiset";
}

CompareMode parse_mode(std::string_view text) {
  if (text == "set") return CompareMode::Set;
  if (text == "multiset") return CompareMode::Multiset;
  throw std::invalid_argument("unknown comparison mode \"" + std::string(text) +
                              "\" (expected set or multiset)");
}

std::string SpectralSignature::key(CompareMode mode) const {
  return mode == CompareMode::Set ? squarefree.to_string() : rational_polynomial_string(monic);
}

SpectralSignature signature(const IntPolynomial& psi, int delta) {
  return {delta, squarefree_part(psi), monic_coefficients(psi)};
}

SpectralSignature signature(const Graph& graph) {
  return signature(charpoly_psi(graph), class_key(graph).delta);
}

}  // namespace qgraph
