"""HTTP facade over the core library.

Import `app` from `hypercut.service.app` to mount it, or run
`hypercut serve` for a local uvicorn instance.
"""
