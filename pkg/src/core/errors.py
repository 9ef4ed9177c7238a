"""
例外定義

すべてのドメイン例外は機械可読な code と人間向けの message を持つ。
CLI はこの code を使って終了コードと診断出力を決める。
"""

from typing import Optional


class SdepthError(Exception):
    """ドメイン例外の基底クラス"""

    code: str = "INTERNAL_ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidArgument(SdepthError):
    code = "INVALID_ARGUMENT"


class ArithmeticOverflow(SdepthError):
    """64ビット符号なし整数の範囲を超えた"""

    code = "OVERFLOW"


class NotPure(SdepthError):
    code = "NOT_PURE"


class InvalidCertificate(SdepthError):
    code = "INVALID_CERTIFICATE"


class ResourceLimit(SdepthError):
    """探索ノード数や列挙数の上限に達した"""

    code = "RESOURCE_LIMIT"


class ParseError(SdepthError):
    code = "INVALID_INPUT"

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"{line}行目: {message}"
        super().__init__(message)
        self.line = line
