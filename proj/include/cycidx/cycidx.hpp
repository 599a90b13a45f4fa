#pragma once

#include "error.hpp"
#include "laurent.hpp"
#include "monomial.hpp"
#include "operads.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "theorems.hpp"
#include "verify.hpp"
