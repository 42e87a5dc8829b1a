#ifndef NCM_NCM_HPP
#define NCM_NCM_HPP

#include "ncm/algebra.hpp"
#include "ncm/bubbletree.hpp"
#include "ncm/clique.hpp"
#include "ncm/constructions.hpp"
#include "ncm/freeop.hpp"
#include "ncm/io.hpp"
#include "ncm/koszul.hpp"
#include "ncm/linalg.hpp"
#include "ncm/magma.hpp"
#include "ncm/numeric.hpp"
#include "ncm/rewrite.hpp"
#include "ncm/series.hpp"
#include "ncm/syntax_tree.hpp"

#endif // NCM_NCM_HPP
