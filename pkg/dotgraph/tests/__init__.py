# Tests package initialization. 
