#pragma once

#include <string>

#include "json.hpp"

#include "galcoh/picard.hpp"

namespace galcoh {

using json = nlohmann::ordered_json;

/// Malformed or schema-violating input (distinct from computation-level
/// failures such as budget or invariant violations).
struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrices are arrays of arrays of decimal integer strings; plain JSON
/// integers are accepted on input but always emitted as strings.
IntMatrix parse_matrix(const json& j);
json matrix_to_json(const IntMatrix& m);

/// {"kind":"cyclic","order":n} | {"kind":"table","table":[[..]]} |
/// {"kind":"perm","degree":d,"generators":[[..]]}
FiniteGroup parse_group(const json& j, const Limits& limits = {});

/// {"rank":r,"generator_action":[matrix per generator]}
GammaLattice parse_lattice(const json& j, const FiniteGroup& group);
json lattice_to_json(const GammaLattice& l, const FiniteGroup& group);

/// {"group":group,"A":lattice,"B":lattice,"map":matrix}
TwoTermComplex parse_complex(const json& j, const Limits& limits = {});

/// {"kind":"root_datum",...} | {"kind":"torus",...} | {"kind":"raw",...} |
/// {"kind":"product","factors":[..]}
ReductiveGroupSpec parse_spec(const json& j, const Limits& limits = {});

/// {"galois":group,"P_star":lattice,"S_star":lattice,"map":matrix}
ResolutionData parse_resolution(const json& j, const Limits& limits = {});

json group_to_json(const FinAbGroup& g);

json load_json_file(const std::string& path);

}  // namespace galcoh
