#pragma once

#include "spmvkit/bcsr.hpp"
#include "spmvkit/bench.hpp"
#include "spmvkit/csr.hpp"
#include "spmvkit/dump.hpp"
#include "spmvkit/ellpack.hpp"
#include "spmvkit/fill.hpp"
#include "spmvkit/format_kind.hpp"
#include "spmvkit/matrix_market.hpp"
#include "spmvkit/memsim.hpp"
#include "spmvkit/reorder.hpp"
#include "spmvkit/rgcsr.hpp"
#include "spmvkit/synthetic.hpp"
#include "spmvkit/triplet.hpp"
