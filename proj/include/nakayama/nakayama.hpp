#pragma once

// Everything except the io layer, which needs the vendored JSON header.

#include <nakayama/classifier.hpp>
#include <nakayama/errors.hpp>
#include <nakayama/extended_nat.hpp>
#include <nakayama/homology.hpp>
#include <nakayama/kupisch.hpp>
#include <nakayama/modules.hpp>
#include <nakayama/oracle/compare.hpp>
#include <nakayama/oracle/fp_matrix.hpp>
#include <nakayama/oracle/matrix_oracle.hpp>
#include <nakayama/precluster.hpp>
