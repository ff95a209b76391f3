#pragma once

#include <span>
#include <string_view>

#include "vabs/error.hpp"
#include "vabs/scenario.hpp"

namespace vabs {

class UnknownExemplar : public Error {
 public:
  explicit UnknownExemplar(std::string_view name);
};

// barchart, integer-plot, random-plotter, figure-scores.
std::span<const std::string_view> exemplar_names();

// Scenario document for a built-in exemplar; throws UnknownExemplar.
Json exemplar_document(std::string_view name);

}  // namespace vabs
