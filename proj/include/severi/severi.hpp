#pragma once

// Exact counts of plane curves with prescribed contact conditions along a
// fixed smooth conic, and the curve counts / Gromov-Witten invariants of
// low-degree del Pezzo surfaces built from them.

#include "severi/arith.hpp"
#include "severi/config.hpp"
#include "severi/errors.hpp"
#include "severi/irr_engine.hpp"
#include "severi/memo_store.hpp"
#include "severi/red_engine.hpp"
#include "severi/reference_counts.hpp"
#include "severi/seq_enum.hpp"
#include "severi/surfaces.hpp"
#include "severi/tangency_seq.hpp"
