#ifndef LATKIT_ERRORS_HPP
#define LATKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latkit {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_a_poset : error { using error::error; };
struct not_a_lattice : error { using error::error; };
struct empty_input : error { using error::error; };
struct foreign_element : error { using error::error; };
struct parameter_out_of_range : error { using error::error; };
struct shape_mismatch : error { using error::error; };
struct kernel_non_empty : error { using error::error; };
struct kind_violation : error { using error::error; };
struct too_large : error { using error::error; };
struct action_invalid : error { using error::error; };
struct not_continuous : error { using error::error; };
struct no_comparable_pair : error { using error::error; };
struct syntax_error : error { using error::error; };
struct unresolved_reference : error { using error::error; };
struct duplicate_name : error { using error::error; };
struct unknown_verb : error { using error::error; };

}  // namespace latkit

#endif  // LATKIT_ERRORS_HPP
