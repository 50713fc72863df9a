def f_gold ( n ) :
    return n * n * n


if __name__ == '__main__' :
    print ( f_gold ( 10 ) )
