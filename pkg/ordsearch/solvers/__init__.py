# Copyright 2019 The Forte Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from ordsearch.solvers.base import *
from ordsearch.solvers.order_dp import *
from ordsearch.solvers.neighborhood_xp import *
from ordsearch.solvers.inversions import *
from ordsearch.solvers.invwin import *
from ordsearch.solvers.hillclimb import *
from ordsearch.solvers.oracle import *
