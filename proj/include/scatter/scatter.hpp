#pragma once

#include "scatter/criteria.hpp"
#include "scatter/cyclotomic.hpp"
#include "scatter/engine.hpp"
#include "scatter/error.hpp"
#include "scatter/field.hpp"
#include "scatter/linpoly.hpp"
#include "scatter/number_theory.hpp"
#include "scatter/report.hpp"
#include "scatter/suites.hpp"
#include "scatter/symbolic.hpp"
#include "scatter/text_format.hpp"
