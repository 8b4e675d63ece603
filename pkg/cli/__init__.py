"""
ED文字列ツールキット - コマンドラインインターフェース
"""
