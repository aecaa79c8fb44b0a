#pragma once

#include <string>

#include "drtest/adian.hpp"
#include "drtest/log.hpp"
#include "drtest/presentation.hpp"
#include "drtest/whitehead.hpp"

namespace drtest {

/// Directed edges initial -> terminal, labeled by the label vertex.
std::string to_dot(const Log& g);
std::string to_dot(const UndirectedGraph& g);
/// Endpoint labels are left out, as in the usual drawings.
std::string to_dot(const LabeledEdgeGraph& g);
std::string to_dot(const WhiteheadGraph& g, const Presentation& p);

}  // namespace drtest
