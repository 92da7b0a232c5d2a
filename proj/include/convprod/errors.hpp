#ifndef CONVPROD_ERRORS_HPP
#define CONVPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace convprod {

// Invalid arguments / violated call contracts. CLI maps these to exit code 2.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Two operands live on different grids.
struct dimension_error : precondition_error {
  using precondition_error::precondition_error;
};

// Declared data property (support bound, finiteness, ...) does not hold.
struct contract_error : precondition_error {
  using precondition_error::precondition_error;
};

// File system failures. CLI maps these to exit code 3.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unparseable or structurally invalid serialized manifest.
struct manifest_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Manifest parsed fine but carries an unsupported version tag.
struct version_error : manifest_error {
  using manifest_error::manifest_error;
};

}  // namespace convprod

#endif
