#pragma once

#include <stdexcept>
#include <string>

namespace atgrs {

// Failure kinds surfaced by the toolkit. CLI maps all of these to exit 2.
enum class errc {
    not_prime,
    not_irreducible,
    order_too_large,
    field_mismatch,
    division_by_zero,
    duplicate_roots,
    zero_root_negative_power,
    zero_evaluation_point,
    singular,
    not_square,
    leading_not_one,
    length_mismatch,
    index_out_of_range,
    method_disagreement,
    not_single_twist,
    zero_twist,
    search_space_too_large,
    invalid_argument,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace atgrs
