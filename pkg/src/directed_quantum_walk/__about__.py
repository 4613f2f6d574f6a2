# SPDX-FileCopyrightText: 2024-present directed-quantum-walk contributors
#
# SPDX-License-Identifier: MIT
__version__ = "0.1.0"
