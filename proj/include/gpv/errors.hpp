#pragma once

#include <stdexcept>
#include <string>

namespace gpv {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct loop_error : error { using error::error; };
struct duplicate_edge_error : error { using error::error; };
struct index_error : error { using error::error; };
struct empty_set_error : error { using error::error; };
struct disconnected_error : error { using error::error; };
struct degenerate_pair_error : error { using error::error; };
struct not_an_edge_error : error { using error::error; };
struct spec_error : error { using error::error; };
struct generation_error : error { using error::error; };
struct size_error : error { using error::error; };
struct parse_error : error { using error::error; };

} // namespace gpv
