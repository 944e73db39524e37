from .protocol import decode_message, encode_message
from .sessions import SessionHub

__all__ = ["SessionHub", "decode_message", "encode_message"]
