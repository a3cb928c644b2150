#pragma once

#include "rwg/arrangement.hpp"
#include "rwg/encodings.hpp"
#include "rwg/error.hpp"
#include "rwg/formulas.hpp"
#include "rwg/graph_io.hpp"
#include "rwg/inflation_expr.hpp"
#include "rwg/permutation.hpp"
#include "rwg/reduced_words.hpp"
#include "rwg/word_graph.hpp"
