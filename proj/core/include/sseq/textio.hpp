#pragma once

// Plain-text fixture loading: Hopf algebra and comodule data files, and the
// named builders backed by them.
//
// Comodule file format (one declaration per line, '#' comments):
//   comodule <name>
//   hopf <builtin algebra name>
//   basis <label> <degree>
//   coaction <label> : <expr>|<label> + <expr>|<label> + ...
// where <expr> is a monomial expression in z1..zk / xi1..xik (or "1").
//
// Hopf file format:
//   hopf <name>
//   builtin <kind A|B|E> <n>

#include "sseq/comodule.hpp"
#include "sseq/hopf.hpp"

#include <string>

namespace sseq {

// Root of the shipped data files; defaults to "data", overridable via the
// SSEQ_DATA_DIR environment variable or assignment.
std::string& data_dir();

HopfAlgebra load_hopf(const std::string& path);
Comodule load_comodule(const std::string& path);

// The eight-dimensional A2star-comodule fixtures a1_00 .. a1_11.
Comodule build_A1_comodule(int i, int j);

// name in {H(V0), H(Ceta), H(Y), V3, V4, R_sigma, Rprime_sigma, S_sigma,
// a1_00, a1_01, a1_10, a1_11}; sigma is used by the three parametrized
// families.
Comodule build_named_comodule(const std::string& name, int sigma = -1);

std::string trim(const std::string& s);
std::vector<std::string> split(const std::string& s, char sep);

}  // namespace sseq
