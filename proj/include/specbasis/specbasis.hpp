#pragma once

#include "specbasis/basis.hpp"
#include "specbasis/complex_matrix.hpp"
#include "specbasis/cyclotomic.hpp"
#include "specbasis/grouprep.hpp"
#include "specbasis/hadamard.hpp"
#include "specbasis/hadamard_extract.hpp"
#include "specbasis/monomial.hpp"
#include "specbasis/pseudoclosure.hpp"
#include "specbasis/rational.hpp"
#include "specbasis/report.hpp"
#include "specbasis/transform.hpp"
