// Copyright (C) 2026 The vimaps Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "count.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "qh_oracle.hpp"
#include "subsets.hpp"
#include "symfunc.hpp"
#include "twist.hpp"
#include "vi_engine.hpp"
