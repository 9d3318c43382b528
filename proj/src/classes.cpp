#include "gclab/classes.hpp"

namespace gclab {

ClassSpec class_spec(GraphClass c) {
    ClassSpec spec;
    spec.name = std::string(class_name(c));
    spec.member = [c](const Graph& g) { return is_member(g, c); };
    spec.claimed_hereditary = true;
    return spec;
}

const std::vector<std::string>& class_roster_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (GraphClass c : kAllClasses) out.emplace_back(class_name(c));
        return out;
    }();
    return names;
}

}  // namespace gclab
