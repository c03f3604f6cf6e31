#pragma once

#include "kenmotsu/analysis.hpp"
#include "kenmotsu/connection.hpp"
#include "kenmotsu/contact.hpp"
#include "kenmotsu/curvature.hpp"
#include "kenmotsu/expr.hpp"
#include "kenmotsu/kenmotsu_check.hpp"
#include "kenmotsu/manifold.hpp"
#include "kenmotsu/parser.hpp"
#include "kenmotsu/printer.hpp"
#include "kenmotsu/report.hpp"
#include "kenmotsu/spec_file.hpp"
#include "kenmotsu/tensor.hpp"
#include "kenmotsu/verify.hpp"
