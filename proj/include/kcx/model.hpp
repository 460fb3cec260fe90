#pragma once

// The line-oriented model file format. A file starts with `kcx-format 1` and
// continues with `key: payload` lines; `#` starts a comment. Four kinds of
// model share it: complexes, block systems, staged Q/Z descriptors and epsilon
// jobs. Order payloads use the same syntax as OrderSpec::describe().

#include "kcx/dl.hpp"
#include "kcx/qz.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace kcx {

struct StagedModel {
  NBoldDescriptor descriptor;
  std::optional<DeltaChain> chain;
};

struct EpsilonJob {
  EpsilonSeq epsilon;
  std::optional<EpsilonSeq> compare;
  std::optional<std::string> element;
};

using Model = std::variant<NCoefficientComplex, BlockSystem, StagedModel, EpsilonJob>;

/// Errors carry the line and column of the offending payload.
Model parse_model(const std::string &text);
/// Block sums of uniform level print as the `blocks:` shorthand.
std::string print_model(const Model &m);
/// Every section written out, never the shorthand.
std::string print_complex_expanded(const NCoefficientComplex &X);

/// Same level, groups, maps and orders; block labels are compared only when
/// both sides carry them.
bool same_complex(const NCoefficientComplex &a, const NCoefficientComplex &b);
bool same_model(const Model &a, const Model &b);

// Payload grammars, also used for command-line arguments. Errors report line 1.
FGAbelianGroup parse_group(const std::string &s);
Matrix parse_matrix(const std::string &s, std::size_t rows, std::size_t cols);
/// "(1,0,-2)"
Vec parse_vector(const std::string &s);
/// "(1,0),(0,1)"
std::vector<Vec> parse_vector_list(const std::string &s);
OrderSpec parse_order(const std::string &s, const FGAbelianGroup &ambient);
/// "C*2, I2, S1"
std::vector<BlockLabel> parse_blocks(const std::string &s, const Int &n);
std::string print_blocks(const std::vector<BlockLabel> &labels);
/// "(x);(y);(z)" checked against the groups of X.
Triple parse_triple(const std::string &s, const NCoefficientComplex &X);
/// "2,6,24"
DeltaChain parse_chain(const std::string &s);

struct DLTriple {
  DLElement g;
  REBElement r;
  int z = 0;
};
/// "x=1;y={0:0} | a=0;b={};c=1 | z=0", the last two parts optional.
DLTriple parse_dl_triple(const std::string &s);

} // namespace kcx
