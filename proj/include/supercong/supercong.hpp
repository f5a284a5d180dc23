#pragma once

#include "supercong/errors.hpp"
#include "supercong/padic/rational.hpp"
#include "supercong/padic/modular.hpp"
#include "supercong/padic/padic_int.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/quad_ext.hpp"
#include "supercong/report.hpp"
#include "supercong/hyper/hypergeometric.hpp"
#include "supercong/hyper/legendre.hpp"
#include "supercong/hyper/sequences.hpp"
#include "supercong/hyper/eta.hpp"
#include "supercong/curves/curves.hpp"
#include "supercong/formal/series.hpp"
#include "supercong/formal/group_law.hpp"
#include "supercong/lab/common.hpp"
#include "supercong/lab/elliptic.hpp"
#include "supercong/lab/k3.hpp"
#include "supercong/lab/dwork.hpp"
#include "supercong/lab/apery.hpp"
#include "supercong/lab/formal.hpp"
#include "supercong/harness/scan_spec.hpp"
#include "supercong/harness/registry.hpp"
#include "supercong/harness/scan.hpp"
#include "supercong/harness/store.hpp"
#include "supercong/harness/export.hpp"
