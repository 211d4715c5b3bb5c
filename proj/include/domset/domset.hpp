#pragma once

#include "domset/degeneracy.hpp"
#include "domset/domination.hpp"
#include "domset/enumerate.hpp"
#include "domset/generate.hpp"
#include "domset/girth.hpp"
#include "domset/graph.hpp"
#include "domset/oracle.hpp"
#include "domset/visitor.hpp"
