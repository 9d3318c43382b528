#ifndef GCLAB_CLASSES_HPP
#define GCLAB_CLASSES_HPP

#include <string>
#include <vector>

#include "gclab/forbidden.hpp"
#include "gclab/recognizers.hpp"

namespace gclab {

/// Engine-ready spec for a roster class.
ClassSpec class_spec(GraphClass c);

/// Fixed roster spelling, in roster order.
const std::vector<std::string>& class_roster_names();

}  // namespace gclab

#endif
