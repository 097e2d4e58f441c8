#pragma once

#include "hsl/antipode.hpp"
#include "hsl/catalog.hpp"
#include "hsl/error.hpp"
#include "hsl/families/closed_forms.hpp"
#include "hsl/families/graphs.hpp"
#include "hsl/families/hypergraphs.hpp"
#include "hsl/families/partitions.hpp"
#include "hsl/families/simplicial.hpp"
#include "hsl/fock.hpp"
#include "hsl/int_polynomial.hpp"
#include "hsl/io.hpp"
#include "hsl/label_set.hpp"
#include "hsl/linear.hpp"
#include "hsl/orders.hpp"
#include "hsl/parallel.hpp"
#include "hsl/poset.hpp"
#include "hsl/power_sums.hpp"
#include "hsl/rational.hpp"
#include "hsl/reassembly.hpp"
#include "hsl/species.hpp"
#include "hsl/symfunc.hpp"
