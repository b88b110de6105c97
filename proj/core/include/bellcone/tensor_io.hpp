#pragma once

#include "bellcone/tensor.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace bellcone {

/// A tensor read from a file whose variance is only known at run time.
using AnyTensor = std::variant<CorrelationTensor, FunctionalTensor>;

/// Text format:
///   bellcone-tensor v1; n=<int>; variance=<upper|lower>
///   <word> <rational>        (one line per nonzero entry, canonical order)
/// Writing omits zero entries. Reading accepts entries in any order, missing
/// words are zero, and `#` starts a comment line.
template <Variance V>
std::string format_tensor(const Tensor<V>& t);

AnyTensor parse_tensor(std::istream& in);
AnyTensor parse_tensor_string(const std::string& text);
AnyTensor read_tensor_file(const std::string& path);

/// Reads a file and requires the given variance.
CorrelationTensor read_correlation_file(const std::string& path);
FunctionalTensor read_functional_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& contents);

}  // namespace bellcone
