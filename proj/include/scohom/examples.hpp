#pragma once

#include <string>
#include <vector>

#include "scohom/liesuper.hpp"

namespace scohom {

/// Names of the shipped example algebras; each instantiates for p in {3, 5}.
std::vector<std::string> builtinExampleNames();

/// Build a named example over F_p. Throws std::invalid_argument on unknown names.
LieSuperAlgebraSpec builtinExample(const std::string& name, uint32_t p);

/// All examples instantiated at both shipped primes.
std::vector<LieSuperAlgebraSpec> allBuiltinExamples();

}  // namespace scohom
