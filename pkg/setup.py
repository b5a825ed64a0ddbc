#!/usr/bin/env python

####################################################################
# ### setup.py                                                   ###
####################################################################
# ### Author: GIN Kit Contributors                               ###
####################################################################
#                                                                ###
# Copyright (c) 2026, GIN Kit Contributors.                      ###
# All Rights Reserved.                                           ###
# SPDX-License-Identifier: Apache-2.0                            ###
#                                                                ###
####################################################################

from setuptools import find_packages, setup

setup(
    setup_requires=["pbr"],
    pbr=True,
    licenses_files=["LICENSE"],
    packages=find_packages(exclude=["test", "*.test", "*.test.*", "test.*"]),
    python_requires=">=3.8",
)
