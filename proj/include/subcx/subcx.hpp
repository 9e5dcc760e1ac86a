#pragma once

#include "subcx/algebra/field.hpp"
#include "subcx/algebra/field_dispatch.hpp"
#include "subcx/algebra/linalg.hpp"
#include "subcx/algebra/matrix.hpp"
#include "subcx/algebra/poly.hpp"
#include "subcx/algebra/poly_text.hpp"
#include "subcx/bgg/bgg_l.hpp"
#include "subcx/bgg/bgg_r.hpp"
#include "subcx/bgg/tate.hpp"
#include "subcx/complexes/complex.hpp"
#include "subcx/complexes/eagon_northcott.hpp"
#include "subcx/complexes/koszul.hpp"
#include "subcx/core/binomial.hpp"
#include "subcx/core/sequence.hpp"
#include "subcx/exterior/algebra.hpp"
#include "subcx/exterior/ideal.hpp"
#include "subcx/exterior/module.hpp"
#include "subcx/io/serialize.hpp"
#include "subcx/oracle/containment.hpp"
#include "subcx/oracle/subcomplex_search.hpp"
#include "subcx/oracle/submodule_hfs.hpp"
#include "subcx/oracle/subspaces.hpp"
#include "subcx/ranks/en_filter.hpp"
#include "subcx/ranks/koszul_rs.hpp"
#include "subcx/ranks/macaulay.hpp"
#include "subcx/ranks/sumset.hpp"
