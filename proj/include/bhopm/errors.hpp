#pragma once

#include <stdexcept>
#include <string>

namespace bhopm {

// Error categories map 1:1 onto CLI exit codes.
enum class errc {
    validation = 2,   // bad input, schema, lookup, stale posterior
    sampling = 3,     // adaptation or sampling failure
    convergence = 4,  // R-hat above threshold under --strict
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

inline Error validation_error(const std::string& what) { return Error(errc::validation, what); }
inline Error sampling_error(const std::string& what) { return Error(errc::sampling, what); }
inline Error convergence_error(const std::string& what) { return Error(errc::convergence, what); }

}  // namespace bhopm
