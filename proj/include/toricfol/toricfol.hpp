#pragma once

#include "toricfol/error.hpp"
#include "toricfol/rational.hpp"
#include "toricfol/multipoly.hpp"
#include "toricfol/poly_parser.hpp"
#include "toricfol/chow.hpp"
#include "toricfol/catalog.hpp"
#include "toricfol/formulas.hpp"
#include "toricfol/polyfield.hpp"
#include "toricfol/residue.hpp"
