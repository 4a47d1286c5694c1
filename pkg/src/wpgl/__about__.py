# SPDX-FileCopyrightText: 2024-present
#
# SPDX-License-Identifier: Apache-2.0
__version__ = "0.1.0"
