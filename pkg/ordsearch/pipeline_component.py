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
"""
Pipeline component module
"""
from typing import Optional

from texar.torch import HParams

from ordsearch.common.resources import Resources


class PipelineComponent:
    def initialize(self, resource: Resources, configs: Optional[HParams]):
        r"""The pipeline will call the initialize method before the first
        instance is read. Readers, solvers and writers are initialized with
        ``configs``, and may register shared objects into ``resource``.

        Args:
            resource (Resources): A global resource register.
            configs (HParams): The configuration passed in to set up this
                component.
        """
        pass

    def finish(self, resource: Resources):
        r"""The pipeline will call this function after the last instance, to
        notify all the components. The component can also add objects to
        the resources, such as summary statistics.

        Args:
            resource (Resources): A global resource registry
        """
        pass
